"""Closed forms for (R, R+, R*) of S(G), T(G) and their iterates.

Every formula takes the base tuple ``(n, m, R, R+, R*)``. Coefficients are
:class:`~fractions.Fraction` values, so integer or Fraction inputs give
exact results and float inputs give floats. Terms are grouped as in the
published statements so residuals can be traced term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Number
from typing import Callable, Sequence, Union

from .exceptions import SizeOverflow, ZeroMultiplier
from .invariants import InvariantTriple

F = Fraction
MAX_ITERATION_DEPTH = 20



@dataclass(frozen=True)
class ClosedFormInput:
    n: int
    m: int
    triple: InvariantTriple

    def __post_init__(self):
        n, m = self.n, self.m
        if n < 2:
            raise ValueError(f"need n >= 2, got {n}")
        if not n - 1 <= m <= n * (n - 1) // 2:
            raise ValueError(f"m={m} impossible for a connected simple graph on {n} vertices")
        if any(x <= 0 for x in self.triple):
            raise ValueError(f"invariants must be positive, got {tuple(self.triple)}")

    @classmethod
    def of(cls, n, m, R, R_plus, R_star) -> "ClosedFormInput":
        return cls(n, m, InvariantTriple(R, R_plus, R_star))

    @classmethod
    def from_graph(cls, g, triple: InvariantTriple) -> "ClosedFormInput":
        return cls(g.n, g.m, triple)


def _check_depth(k: int) -> None:
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    if k > MAX_ITERATION_DEPTH:
        raise SizeOverflow(f"k={k} exceeds the supported depth {MAX_ITERATION_DEPTH}")


# -- one step -----------------------------------------------------------------

def subdivision_closed_forms(inp: ClosedFormInput) -> InvariantTriple:
    n, m = inp.n, inp.m
    R, Rp, Rs = inp.triple
    kirchhoff = 2 * R + Rp + F(1, 2) * Rs + F(m * m - n * n + n, 2)
    additive = 4 * Rp + 4 * Rs + (m + n) * (m - n + 1) + 2 * m * (m - n)
    multiplicative = 8 * Rs + 2 * m * (2 * m - 2 * n + 1)
    return InvariantTriple(kirchhoff, additive, multiplicative)


def triangulation_closed_forms(inp: ClosedFormInput) -> InvariantTriple:
    n, m = inp.n, inp.m
    R, Rp, Rs = inp.triple
    kirchhoff = (F(2, 3) * R + F(1, 3) * Rp + F(1, 6) * Rs
                 + F(3 * m * m - n * n + 2 * m * n - 2 * m + n, 6))
    additive = 2 * Rp + 2 * Rs + F(12 * m * m - m * n - n * n - 2 * m + n, 3)
    # 6 R* + 6m^2 - 2mn. The widely quoted 8 R* + 8m^2 - 4mn agrees only
    # on K2 (R*(T(K3)) is 84, not 100).
    multiplicative = 6 * Rs + 6 * m * m - 2 * m * n
    return InvariantTriple(kirchhoff, additive, multiplicative)


def st_comparison(s_triple: InvariantTriple, n: int, m: int) -> InvariantTriple:
    """Invariants of T(G) from those of S(G) and the size of G."""
    R_s, Rp_s, Rs_s = s_triple
    return InvariantTriple(
        F(1, 3) * R_s + F(m * (m + n - 1), 3),
        F(1, 2) * Rp_s + F(15 * m * m + n * n + 4 * m * n - 7 * m - n, 6),
        F(3, 4) * Rs_s + 3 * m * m + m * n - F(3 * m, 2),
    )


def regular_triangulation_kirchhoff(n: int, r: int, R):
    """R(T(G)) for an r-regular G, from R(G) alone."""
    return (F((r + 2) ** 2, 6) * R + F((n * n - n) * (r + 2), 6)
            + F(n * n * (r * r - 4), 8) + F(n, 2))


# -- iterated -----------------------------------------------------------------

def iterated_subdivision_closed_forms(inp: ClosedFormInput, k: int) -> InvariantTriple:
    """Invariants of S^k(G) evaluated directly, without iterating."""
    _check_depth(k)
    if k == 0:
        return inp.triple
    n, m = inp.n, inp.m
    R, Rp, Rs = inp.triple
    p2, p4, p8 = 2**k, 4**k, 8**k
    a = m * (2 * m - 2 * n + 1)
    b = (m - n) * (m - n + 1)
    multiplicative = p8 * Rs + F(p8 - p2, 3) * a
    additive = p4 * Rp + (p8 - p4) * Rs + F(p8 - p2, 3) * a - F(p4 - 1, 3) * b
    kirchhoff = (p2 * R + F(p4 - p2, 2) * Rp + F(p8 - 2 * p4 + p2, 4) * Rs
                 + F(p8 - p2, 12) * a - F(p4 - 1, 6) * b)
    return InvariantTriple(kirchhoff, additive, multiplicative)


def iterated_triangulation_closed_forms(inp: ClosedFormInput, k: int) -> InvariantTriple:
    """Invariants of T^k(G) evaluated directly, without iterating.

    Solutions of the one-step recurrences with ``n_k = (3^k - 1) m / 2 + n``
    and ``m_k = 3^k m``; each is a combination of ``9^k, 6^k, 3^k, 2^k, 1``
    and ``(2/3)^k``.
    """
    _check_depth(k)
    if k == 0:
        return inp.triple
    n, m = inp.n, inp.m
    R, Rp, Rs = inp.triple
    p2, p3, p6, p9 = 2**k, 3**k, 6**k, 9**k
    t = F(2, 3) ** k
    mm, mn, nn = m * m, m * n, n * n - n

    multiplicative = (p6 * Rs
                      + (F(5, 3) * p9 - F(4, 3) * p6 - F(1, 3) * p3) * mm
                      - F(2, 3) * (p6 - p3) * mn)
    additive = (p2 * Rp
                + F(p6 - p2, 2) * Rs
                + (F(85, 84) * p9 - F(2, 3) * p6 - F(1, 3) * p3 - F(2, 21) * p2 + F(1, 12)) * mm
                - F(p6 - 2 * p3 + 1, 3) * mn
                - F((p2 - 1) * nn, 3)
                - (F(p3, 2) - F(p2, 3) - F(1, 6)) * m)
    kirchhoff = (t * R
                 + (p2 - t) / 4 * Rp
                 + (p6 - 2 * p2 + t) / 16 * Rs
                 + (F(25, 168) * p9 - F(p6, 12) - F(3, 28) * p3 - F(p2, 42) - F(1, 24)
                    + F(3, 28) * t) * mm
                 - (F(p6, 24) - F(3, 14) * p3 - F(1, 6) + F(19, 56) * t) * mn
                 - (p2 + 2 - 3 * t) / 12 * nn
                 - (F(5, 28) * p3 - F(p2, 12) + F(1, 12) - F(5, 28) * t) * m)
    return InvariantTriple(kirchhoff, additive, multiplicative)


# -- generic first-order linear recurrence ------------------------------------

Seq = Union[Callable[[int], Number], Sequence[Number]]


@dataclass(frozen=True)
class RecurrenceSpec:
    """``y_{k+1} = f_k y_k + g_k`` with ``y_0`` given.

    ``f`` and ``g`` are callables of ``k`` or indexable sequences.
    """

    y0: Number
    f: Seq
    g: Seq

    def f_at(self, k: int):
        return self.f(k) if callable(self.f) else self.f[k]

    def g_at(self, k: int):
        return self.g(k) if callable(self.g) else self.g[k]


def _div(a, b):
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return Fraction(a) / b
    return a / b


def solve_linear_recurrence(spec: RecurrenceSpec, k: int):
    """``y_k`` in product-sum form.

    ``y_k = (y_0 + sum_{i<k} h_i) * prod_{j<k} f_j`` where
    ``h_i = g_i / prod_{j<=i} f_j``.
    """
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    prod = 1
    acc = spec.y0
    for i in range(k):
        f_i = spec.f_at(i)
        if f_i == 0:
            raise ZeroMultiplier(i)
        prod = prod * f_i
        acc = acc + _div(spec.g_at(i), prod)
    return acc * prod
