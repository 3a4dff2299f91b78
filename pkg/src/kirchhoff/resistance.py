"""Brute-force resistance distances from the Laplacian pseudoinverse.

Two backends share one contract. ``float`` factors the regularized
Laplacian ``L + J/n`` with a Cholesky decomposition; ``rational`` inverts
``n L + J`` exactly with fraction-free (Bareiss) elimination and returns
:class:`fractions.Fraction` entries.
"""

from __future__ import annotations

import enum
import io
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import linalg

from .exceptions import DimensionMismatch, PrecisionPolicyError, SingularSystem
from .graph import Graph

DEFAULT_TOLERANCE = 1e-9
DEFAULT_RATIONAL_MAX_ORDER = 64


class BackendKind(enum.Enum):
    FLOAT = "float"
    RATIONAL = "rational"


@dataclass(frozen=True)
class NumericBackend:
    kind: BackendKind = BackendKind.FLOAT
    tolerance: float = DEFAULT_TOLERANCE
    max_rational_order: int = DEFAULT_RATIONAL_MAX_ORDER

    @classmethod
    def parse(cls, value, **kwargs) -> "NumericBackend":
        if isinstance(value, cls):
            return value
        if value is None:
            return cls(**kwargs)
        if isinstance(value, BackendKind):
            return cls(value, **kwargs)
        try:
            return cls(BackendKind(str(value).lower()), **kwargs)
        except ValueError:
            raise ValueError(f"unknown backend {value!r}; expected 'float' or 'rational'") from None

    @property
    def exact(self) -> bool:
        return self.kind is BackendKind.RATIONAL

    def supports(self, order: int) -> bool:
        return not self.exact or order <= self.max_rational_order


FLOAT = NumericBackend(BackendKind.FLOAT)
RATIONAL = NumericBackend(BackendKind.RATIONAL)


@dataclass(frozen=True, eq=False)
class LaplacianMatrix:
    entries: np.ndarray

    @property
    def order(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True, eq=False)
class ResistanceMatrix:
    """Symmetric matrix of pairwise effective resistances.

    ``entries`` has dtype float64, or object holding ``Fraction`` values
    when produced by the rational backend (or lifted from such a matrix).
    """

    entries: np.ndarray

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    @property
    def exact(self) -> bool:
        return self.entries.dtype == object

    def __getitem__(self, idx):
        return self.entries[idx]

    def astype_float(self) -> np.ndarray:
        return np.asarray(self.entries, dtype=float)

    def to_csv(self) -> str:
        """Full symmetric matrix, row-major, 17 significant digits."""
        buf = io.StringIO()
        for row in self.astype_float():
            buf.write(",".join(f"{x:.17g}" for x in row))
            buf.write("\n")
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "ResistanceMatrix":
        rows = [[float(x) for x in line.split(",")] for line in text.splitlines() if line.strip()]
        return cls(np.array(rows, dtype=float))


def laplacian(g: Graph) -> LaplacianMatrix:
    """``L = D - A`` as a dense integer matrix."""
    L = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        L[u, v] -= 1
        L[v, u] -= 1
        L[u, u] += 1
        L[v, v] += 1
    return LaplacianMatrix(L)


def _pairwise_from_pseudoinverse(M: np.ndarray) -> np.ndarray:
    diag = np.diagonal(M)
    omega = diag[:, None] + diag[None, :] - 2 * M
    np.fill_diagonal(omega, Fraction(0) if omega.dtype == object else 0.0)
    return omega


def _float_pseudoinverse(L: np.ndarray) -> np.ndarray:
    n = L.shape[0]
    J = np.full((n, n), 1.0 / n)
    A = L.astype(float) + J
    try:
        factor = linalg.cho_factor(A, lower=True, check_finite=False)
    except linalg.LinAlgError as exc:
        raise SingularSystem(f"regularized Laplacian is not positive definite: {exc}") from None
    pivots = np.abs(np.diagonal(factor[0]))
    # A disconnected graph leaves an exact zero eigenvalue; rounding can
    # still let Cholesky finish with a pivot at noise level.
    if pivots.min() <= np.sqrt(n * np.finfo(float).eps) * pivots.max():
        raise SingularSystem("regularized Laplacian is numerically singular")
    return linalg.cho_solve(factor, np.eye(n), check_finite=False) - J


def bareiss_inverse(A) -> tuple[list[list[int]], int]:
    """Exact inverse of an integer matrix as ``(B, d)`` with ``A^{-1} = B / d``.

    Fraction-free Gauss-Jordan on ``[A | I]``; every intermediate division
    is exact. Raises :class:`SingularSystem` if ``det(A) == 0``.
    """
    n = len(A)
    rows = [[int(x) for x in A[i]] + [int(i == j) for j in range(n)] for i in range(n)]
    prev = 1
    for c in range(n):
        p = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if p is None:
            raise SingularSystem("matrix is singular in exact arithmetic")
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
        piv = rows[c]
        pc = piv[c]
        for r in range(n):
            if r == c:
                continue
            row = rows[r]
            f = row[c]
            rows[r] = [(pc * x - f * y) // prev for x, y in zip(row, piv)]
        prev = pc
    # left block is now prev * I, so the right block is prev * A^{-1};
    # prev equals det(A) up to the sign of the row permutation
    return [row[n:] for row in rows], prev


def _rational_pseudoinverse(L: np.ndarray) -> np.ndarray:
    n = L.shape[0]
    scaled = (n * L + 1).tolist()
    adj, det = bareiss_inverse(scaled)
    M = np.empty((n, n), dtype=object)
    shift = Fraction(1, n)
    for i in range(n):
        for j in range(n):
            # (L + J/n)^{-1} = n (nL + J)^{-1}
            M[i, j] = Fraction(n * adj[i][j], det) - shift
    return M


def laplacian_pseudoinverse(g: Graph, backend=None) -> np.ndarray:
    backend = NumericBackend.parse(backend)
    L = laplacian(g).entries
    if backend.exact:
        if not backend.supports(g.n):
            raise PrecisionPolicyError(
                f"rational backend limited to {backend.max_rational_order} vertices, graph has {g.n}"
            )
        return _rational_pseudoinverse(L)
    return _float_pseudoinverse(L)


def resistance_matrix(g: Graph, backend=None) -> ResistanceMatrix:
    """Effective resistances ``M_ii + M_jj - 2 M_ij`` with unit edge resistors."""
    M = laplacian_pseudoinverse(g, backend)
    omega = _pairwise_from_pseudoinverse(M)
    if omega.dtype != object:
        omega = 0.5 * (omega + omega.T)
    return ResistanceMatrix(omega)


def _check_order(g: Graph, omega: ResistanceMatrix) -> None:
    if omega.order != g.n:
        raise DimensionMismatch(f"resistance matrix has order {omega.order}, graph has {g.n} vertices")


def foster_sum(g: Graph, omega: ResistanceMatrix):
    """Sum of resistances over the edges of ``g`` (equals ``n - 1``)."""
    _check_order(g, omega)
    if not g.edges:
        return 0
    u, v = np.array(g.edges).T
    vals = omega.entries[u, v]
    if omega.exact:
        return sum(vals, Fraction(0))
    return math.fsum(vals)
