"""
Command-Line Schemas

Validated option bundles for the command layer.
"""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

FamilyId = Literal["H3", "H4", "H6", "H7", "A3_1", "A3_2", "A4_1", "A4_2", "A6_1", "A6_2", "A7_1"]


class CliConfig(BaseModel):
    """Global options after merging the environment with the command line."""
    model_config = ConfigDict(frozen=True)

    output_format: Literal["text", "json"] = "text"
    input_format: Literal["graph6", "edgelist"] = "graph6"
    tol: float = Field(default=1e-12, gt=0)
    jobs: int = Field(default=1, ge=1)
    cache_path: Optional[str] = None
    log_level: str = "INFO"


class FamilySpec(BaseModel):
    """A named family member: H families need n, A bases ignore it."""
    model_config = ConfigDict(frozen=True)

    family_id: FamilyId
    n: Optional[int] = Field(default=None, ge=1)
