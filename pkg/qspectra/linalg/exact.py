"""
Exact Integer Linear Algebra

Signless Laplacian construction, integer matrix powers, spectral moments and
characteristic polynomials. All arithmetic is on Python integers (numpy object
arrays for products), so nothing overflows.

Characteristic polynomials follow the convention det(M - xI).
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np
import sympy
from pydantic import BaseModel, ConfigDict, model_validator

from qspectra.errors import InvalidMatrixError
from qspectra.graphs.graph import degrees
from qspectra.schemas.common import JsonInt
from qspectra.schemas.spectra import MomentSequence

logger = logging.getLogger(__name__)

X = sympy.Symbol("x")


@dataclass(frozen=True)
class IntSymMatrix:
    """Symmetric matrix of arbitrary-precision integers."""
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        order = len(rows)
        for i, row in enumerate(rows):
            if len(row) != order:
                raise InvalidMatrixError(f"row {i} has length {len(row)}, expected {order}")
            for j, entry in enumerate(row):
                if isinstance(entry, bool) or not isinstance(entry, (int, np.integer)):
                    raise InvalidMatrixError(f"entry ({i}, {j}) = {entry!r} is not an integer")
        rows = tuple(tuple(int(entry) for entry in row) for row in rows)
        for i in range(order):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise InvalidMatrixError(f"matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_array(cls, array):
        return cls(tuple(tuple(int(entry) for entry in row) for row in array))

    @classmethod
    def identity(cls, order):
        return cls(tuple(tuple(int(i == j) for j in range(order)) for i in range(order)))

    @property
    def order(self):
        return len(self.rows)

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def trace(self):
        return sum(self.rows[i][i] for i in range(self.order))

    def to_object_array(self):
        array = np.empty((self.order, self.order), dtype=object)
        for i, row in enumerate(self.rows):
            for j, entry in enumerate(row):
                array[i, j] = entry
        return array

    def to_float_array(self):
        return np.array(self.rows, dtype=float).reshape(self.order, self.order)

    def delete(self, index):
        """Principal submatrix with row and column `index` removed."""
        keep = [i for i in range(self.order) if i != index]
        return IntSymMatrix(tuple(tuple(self.rows[i][j] for j in keep) for i in keep))

    def __add__(self, other):
        return IntSymMatrix(tuple(
            tuple(a + b for a, b in zip(row, other_row))
            for row, other_row in zip(self.rows, other.rows)
        ))

    def __sub__(self, other):
        return IntSymMatrix(tuple(
            tuple(a - b for a, b in zip(row, other_row))
            for row, other_row in zip(self.rows, other.rows)
        ))


class CharPoly(BaseModel):
    """Coefficients c_0..c_n of det(M - xI) = sum c_k x^k."""
    model_config = ConfigDict(frozen=True)

    coefficients: Tuple[JsonInt, ...]

    @model_validator(mode="after")
    def non_empty(self):
        if not self.coefficients:
            raise ValueError("a characteristic polynomial has at least one coefficient")
        return self

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def constant(self):
        return self.coefficients[0]

    def __call__(self, x):
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def to_sympy(self):
        return sympy.Poly(list(reversed(self.coefficients)), X, domain="ZZ")

    @classmethod
    def from_sympy(cls, poly, degree=None):
        coefficients = [int(c) for c in reversed(sympy.Poly(poly, X).all_coeffs())]
        if degree is not None:
            coefficients.extend([0] * (degree + 1 - len(coefficients)))
        return cls(coefficients=tuple(coefficients))

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = f"{magnitude}"
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def adjacency(graph):
    """Adjacency matrix A(G); zero diagonal."""
    n = graph.n
    return IntSymMatrix(tuple(
        tuple(int(j in graph.adjacency[i]) for j in range(n)) for i in range(n)
    ))


def degree_matrix(graph):
    degree = degrees(graph)
    n = graph.n
    return IntSymMatrix(tuple(
        tuple(degree[i] if i == j else 0 for j in range(n)) for i in range(n)
    ))


def signless_laplacian(graph):
    """Q = D + A."""
    return degree_matrix(graph) + adjacency(graph)


def matrix_power(matrix, k):
    """Exact k-th power; powers of a symmetric matrix stay symmetric."""
    if k < 0:
        raise ValueError(f"matrix power needs k >= 0, got {k}")
    if matrix.order == 0:
        return matrix
    return IntSymMatrix.from_array(np.linalg.matrix_power(matrix.to_object_array(), k))


def spectral_moment(graph, k):
    """T_k(G) = Tr(Q^k)."""
    if k < 0:
        raise ValueError(f"spectral moment needs k >= 0, got {k}")
    return matrix_power(signless_laplacian(graph), k).trace()


def moment_sequence(graph, horizon):
    """T_0..T_K by repeated multiplication."""
    if horizon < 0:
        raise ValueError(f"horizon must be >= 0, got {horizon}")
    q = signless_laplacian(graph).to_object_array()
    power = np.identity(graph.n, dtype=object)
    moments = []
    for _ in range(horizon + 1):
        moments.append(int(np.trace(power)) if graph.n else 0)
        power = q @ power
    return MomentSequence(moments=moments)


def char_poly(matrix):
    """
    Characteristic polynomial det(M - xI) by the Faddeev-LeVerrier recursion.

    Every division in the recursion is exact over the integers.

    Returns:
        CharPoly with c_n = (-1)^n and c_0 = det(M)

    Raises:
        InvalidMatrixError: for the empty matrix
    """
    n = matrix.order
    if n < 1:
        raise InvalidMatrixError("characteristic polynomial needs order >= 1")

    a = matrix.to_object_array()
    identity = np.identity(n, dtype=object)
    monic = [0] * (n + 1)
    monic[n] = 1
    m = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        m = a @ m + monic[n - k + 1] * identity
        quotient, remainder = divmod(-int(np.trace(a @ m)), k)
        if remainder:
            raise ArithmeticError(f"inexact Faddeev-LeVerrier division at step {k}")
        monic[n - k] = quotient

    sign = -1 if n % 2 else 1
    return CharPoly(coefficients=tuple(sign * c for c in monic))


def char_poly_bareiss(matrix):
    """Characteristic polynomial by fraction-free (Bareiss) elimination on M - xI."""
    n = matrix.order
    if n < 1:
        raise InvalidMatrixError("characteristic polynomial needs order >= 1")
    shifted = sympy.Matrix(matrix.rows) - X * sympy.eye(n)
    determinant = sympy.expand(shifted.det(method="bareiss"))
    return CharPoly.from_sympy(determinant, degree=n)


def newton_power_sums(poly, horizon):
    """
    Power sums p_0..p_K of the roots of a characteristic polynomial.

    Uses Newton's identities on the monic polynomial det(xI - M); for a
    signless Laplacian these equal the spectral moments T_k.
    """
    n = poly.degree
    sign = -1 if n % 2 else 1
    # a[i] is the coefficient of x^(n-i) in det(xI - M)
    a = [sign * poly.coefficients[n - i] for i in range(n + 1)]
    sums = [n]
    for k in range(1, horizon + 1):
        total = sum(a[i] * sums[k - i] for i in range(1, min(k - 1, n) + 1))
        if k <= n:
            total += k * a[k]
        sums.append(-total)
    return sums


def are_q_cospectral(g, h):
    """True iff Q(G) and Q(H) have identical characteristic polynomials."""
    if g.n != h.n:
        return False
    if g.n == 0:
        return True
    return char_poly(signless_laplacian(g)) == char_poly(signless_laplacian(h))
