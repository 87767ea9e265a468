"""
Spectral Schemas

Pydantic models for the values produced by the exact, spectral and walk
modules.
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from qspectra.schemas.common import JsonInt


class MomentSequence(BaseModel):
    """T_0..T_K of a graph; T_k = Tr(Q^k)."""
    model_config = ConfigDict(frozen=True)

    moments: List[JsonInt]

    @property
    def horizon(self):
        return len(self.moments) - 1

    def __getitem__(self, k):
        return self.moments[k]


class Spectrum(BaseModel):
    """Eigenvalues sorted in descending order."""
    model_config = ConfigDict(frozen=True)

    eigenvalues: List[float]
    residual: float = Field(ge=0)
    sweeps: int = 0

    @property
    def spectral_radius(self):
        return self.eigenvalues[0] if self.eigenvalues else 0.0


class SleeValue(BaseModel):
    """A SLEE value and how it was obtained."""
    model_config = ConfigDict(frozen=True)

    value: float
    method: Literal["eigen", "series", "high-precision"]
    truncation_k: Optional[int] = None
    error_bound: Optional[float] = None


class DominanceVerdict(BaseModel):
    """
    Finite-horizon comparison of semi-edge walk counts.

    The outcome only speaks about lengths k <= horizon.
    """
    model_config = ConfigDict(frozen=True)

    horizon: int
    outcome: Literal["strictly-dominates", "dominates", "incomparable"]
    first_strict_k: Optional[int] = None
    first_violation_k: Optional[int] = None
    left_counts: List[JsonInt] = Field(default_factory=list)
    right_counts: List[JsonInt] = Field(default_factory=list)

    @property
    def holds(self):
        return self.outcome != "incomparable"

    @property
    def strict(self):
        return self.outcome == "strictly-dominates"


class TransferCheck(BaseModel):
    """
    Transfer hypotheses evaluated on a transfer route at a finite horizon:
    closed walks at the donor strictly dominated by closed walks at the
    receiver, and every moved vertex's walks to the donor dominated by its
    walks to the receiver.
    """
    model_config = ConfigDict(frozen=True)

    donor: int
    receiver: int
    moved: List[int]
    horizon: int
    closed: DominanceVerdict
    paths: List[DominanceVerdict] = Field(default_factory=list)

    @property
    def holds(self):
        return self.closed.strict and all(verdict.holds for verdict in self.paths)
