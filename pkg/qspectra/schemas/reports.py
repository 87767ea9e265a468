"""
Report Schemas

This module defines the Pydantic models for verification reports and
enumeration runs, as emitted by the search module and printed by the
command line.
"""

from typing import Any, Dict, List

from pydantic import BaseModel, ConfigDict, Field


class Witness(BaseModel):
    """A graph a report relies on, with the value it was judged by."""
    model_config = ConfigDict(populate_by_name=True)

    graph6: str
    slee: float
    graph_class: int = Field(alias="class")


class VerificationReport(BaseModel):
    """
    Outcome of one claim check.

    `passed` is serialized as "pass". A failed verification is data, not an
    exception: callers inspect `passed` and `counterexamples`.
    """
    model_config = ConfigDict(populate_by_name=True)

    claim: str
    params: Dict[str, Any] = Field(default_factory=dict)
    passed: bool = Field(alias="pass")
    witnesses: List[Witness] = Field(default_factory=list)
    counterexamples: List[Dict[str, Any]] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)
    elapsed_ms: float = 0.0

    def to_json(self):
        return self.model_dump_json(by_alias=True, indent=2)


class EnumerationRun(BaseModel):
    """Result of enumerating J_n: per-class counts and the canonical registry."""
    n: int
    counts: Dict[int, int]
    registry: List[str] = Field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def total(self):
        return len(self.registry)
