"""
SLEE Ranking

Orders graphs by SLEE and decides which of them share the maximum. Floats
only screen: candidates within NEAR_TIE_REL of the top value are compared
exactly (Q-cospectrality), and near-ties that are not cospectral are settled
with a high-precision evaluation.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from qspectra.config import DEFAULT_TOL
from qspectra.graphs.canonical import canonical_form
from qspectra.linalg.exact import are_q_cospectral, char_poly, signless_laplacian
from qspectra.linalg.spectral import slee, slee_high_precision
from qspectra.models.cache import CacheRecord

logger = logging.getLogger(__name__)

NEAR_TIE_REL = 1e-9
HIGH_PRECISION_DPS = 50


@dataclass(frozen=True)
class RankedGraph:
    graph: object
    graph6: str
    slee: float


@dataclass
class RankingOutcome:
    """
    Attributes:
        ranked: all graphs, highest SLEE first
        maximizers: graphs sharing the maximum exactly
        runner_up: best graph outside the maximizers, if any
        near_ties: graphs within NEAR_TIE_REL of the top that were checked exactly
        resolved_by_high_precision: near-ties refuted by the high-precision pass
        unresolved: near-ties the high-precision pass could not separate
    """
    ranked: List[RankedGraph]
    maximizers: List[RankedGraph] = field(default_factory=list)
    runner_up: Optional[RankedGraph] = None
    near_ties: int = 0
    resolved_by_high_precision: int = 0
    unresolved: List[RankedGraph] = field(default_factory=list)

    @property
    def relative_gap(self):
        """(top - runner_up) / top, or None when every graph is a maximizer."""
        if self.runner_up is None or not self.maximizers:
            return None
        top = self.maximizers[0].slee
        return (top - self.runner_up.slee) / top


def _score(graph, tol, cache):
    code = canonical_form(graph).graph6()
    if cache is not None:
        record = cache.get(code)
        if record is not None:
            logger.debug(f"Cache hit for {code}")
            return RankedGraph(graph, code, record.slee)

    value = slee(graph, tol).value
    if cache is not None:
        coefficients = char_poly(signless_laplacian(graph)).coefficients
        cache.put(CacheRecord(graph6=code, char_poly=list(coefficients), slee=value))
    return RankedGraph(graph, code, value)


def rank_by_slee(graphs, tol=DEFAULT_TOL, cache=None):
    """
    Rank graphs by SLEE and determine the exact set of maximizers.

    Args:
        graphs: graphs on a common vertex count, non-empty
        tol: eigensolver tolerance
        cache: optional SpectralCache consulted before computing

    Returns:
        RankingOutcome
    """
    graphs = list(graphs)
    if not graphs:
        raise ValueError("cannot rank an empty collection")

    ranked = sorted((_score(g, tol, cache) for g in graphs), key=lambda r: (-r.slee, r.graph6))
    top = ranked[0]
    candidates = [r for r in ranked if top.slee - r.slee <= NEAR_TIE_REL * top.slee]
    outcome = RankingOutcome(ranked=ranked, near_ties=len(candidates) - 1)

    if len(candidates) == 1:
        outcome.maximizers = [top]
    else:
        precise = {r.graph6: slee_high_precision(r.graph, HIGH_PRECISION_DPS) for r in candidates}
        best = max(candidates, key=lambda r: (precise[r.graph6], r.graph6))
        resolution = 10 ** (10 - HIGH_PRECISION_DPS) * precise[best.graph6]
        for r in candidates:
            if r is best or are_q_cospectral(best.graph, r.graph):
                outcome.maximizers.append(r)
            elif abs(precise[r.graph6] - precise[best.graph6]) < resolution:
                logger.warning(f"Near-tie between {best.graph6} and {r.graph6} could not be resolved")
                outcome.unresolved.append(r)
            else:
                outcome.resolved_by_high_precision += 1
        outcome.maximizers.sort(key=lambda r: (-r.slee, r.graph6))

    inside = {r.graph6 for r in outcome.maximizers}
    outcome.runner_up = next((r for r in ranked if r.graph6 not in inside), None)
    logger.debug(
        f"Ranked {len(ranked)} graphs: {len(outcome.maximizers)} maximizer(s), "
        f"{outcome.near_ties} near-tie(s)"
    )
    return outcome
