"""
Floating-Point Spectra

Cyclic Jacobi diagonalisation of symmetric integer matrices and the three
routes to the signless Laplacian Estrada index: eigenvalues, the moment
series, and a high-precision eigensolver for breaking near-ties.
"""

import logging
import math

import mpmath
import numpy as np

from qspectra.config import DEFAULT_MAX_SWEEPS, DEFAULT_TOL
from qspectra.errors import EigenSolverError
from qspectra.graphs.graph import max_degree
from qspectra.linalg.exact import adjacency, signless_laplacian
from qspectra.schemas.spectra import SleeValue, Spectrum

logger = logging.getLogger(__name__)

DEFAULT_REL_ERR = 1e-12
MAX_SERIES_TERMS = 10000


def _off_diagonal_norm(a):
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def eigenvalues_sym(matrix, tol=DEFAULT_TOL, max_sweeps=DEFAULT_MAX_SWEEPS):
    """
    Eigenvalues of a symmetric integer matrix by cyclic Jacobi rotations.

    Sweeps over every (p, q) pair until the off-diagonal Frobenius norm drops
    below tol * ||M||_F. The input is never modified.

    Args:
        matrix: IntSymMatrix
        tol: relative convergence threshold, > 0
        max_sweeps: sweep limit

    Returns:
        Spectrum sorted in descending order

    Raises:
        ValueError: if tol <= 0
        EigenSolverError: if the threshold is not reached within max_sweeps
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")

    a = matrix.to_float_array()
    n = a.shape[0]
    threshold = tol * float(np.linalg.norm(a))

    residual = _off_diagonal_norm(a) if n else 0.0
    sweeps = 0
    while residual > threshold:
        if sweeps == max_sweeps:
            logger.error(f"Jacobi stalled at residual {residual:.3e} after {sweeps} sweeps")
            raise EigenSolverError(residual, sweeps)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
        sweeps += 1
        residual = _off_diagonal_norm(a)

    eigenvalues = sorted((float(x) for x in np.diag(a)), reverse=True)
    return Spectrum(eigenvalues=eigenvalues, residual=residual, sweeps=sweeps)


def signless_spectrum(graph, tol=DEFAULT_TOL):
    return eigenvalues_sym(signless_laplacian(graph), tol)


def adjacency_spectrum(graph, tol=DEFAULT_TOL):
    return eigenvalues_sym(adjacency(graph), tol)


def slee(graph, tol=DEFAULT_TOL):
    """SLEE(G) = sum of e^{q_i} over the signless Laplacian eigenvalues."""
    spectrum = signless_spectrum(graph, tol)
    value = math.fsum(math.exp(q) for q in spectrum.eigenvalues)
    return SleeValue(value=value, method="eigen")


def spectral_radius_bound(graph):
    """Upper bound 2 * max degree on q_1."""
    return 2 * max_degree(graph)


def _log_tail_bound(n, q_hat, k):
    # log of n * q^(K+1) * e^q / (K+1)!
    if q_hat == 0:
        return -math.inf
    return math.log(n) + (k + 1) * math.log(q_hat) + q_hat - math.lgamma(k + 2)


def slee_series(graph, rel_err=DEFAULT_REL_ERR):
    """
    SLEE from the moment series sum_k T_k / k!.

    Terms are added until the tail bound n * q^(K+1) * e^q / (K+1)! falls
    below rel_err times the partial sum, with q = 2 * max degree.

    Returns:
        SleeValue carrying the truncation index K and the tail bound
    """
    if rel_err <= 0:
        raise ValueError(f"relative error must be positive, got {rel_err}")
    n = graph.n
    if n == 0:
        return SleeValue(value=0.0, method="series", truncation_k=0, error_bound=0.0)

    q_hat = spectral_radius_bound(graph)
    q = signless_laplacian(graph).to_object_array()
    power = np.identity(n, dtype=object)
    factorial = 1
    terms = []
    for k in range(MAX_SERIES_TERMS):
        if k:
            power = q @ power
            factorial *= k
        terms.append(int(np.trace(power)) / factorial)
        partial = math.fsum(terms)
        log_bound = _log_tail_bound(n, q_hat, k)
        if log_bound < math.log(rel_err * partial):
            bound = math.exp(log_bound) if log_bound > -math.inf else 0.0
            logger.debug(f"Series converged at K={k} for n={n}, bound={bound:.3e}")
            return SleeValue(value=partial, method="series", truncation_k=k, error_bound=bound)

    raise ArithmeticError(f"moment series did not converge within {MAX_SERIES_TERMS} terms")


def slee_high_precision(graph, dps=50):
    """
    SLEE evaluated with `dps` significant decimal digits (mpmath symmetric
    eigensolver on the exact integer matrix).

    Returns:
        mpmath.mpf
    """
    if graph.n == 0:
        return mpmath.mpf(0)
    rows = signless_laplacian(graph).rows
    with mpmath.workdps(dps):
        eigenvalues = mpmath.eigsy(mpmath.matrix(rows), eigvals_only=True)
        return mpmath.fsum(mpmath.exp(eigenvalues[i]) for i in range(eigenvalues.rows))


def estrada_index(graph, tol=DEFAULT_TOL):
    """EE(G): sum of e^{lambda} over all adjacency eigenvalues."""
    spectrum = adjacency_spectrum(graph, tol)
    return math.fsum(math.exp(x) for x in spectrum.eigenvalues)
