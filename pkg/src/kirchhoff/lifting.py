"""Resistance matrices of S(G) and T(G) computed from the matrix of G alone.

Vertex order matches :func:`kirchhoff.graph.subdivide` and
:func:`kirchhoff.graph.triangulate`: originals first, then the vertex
inserted into the i-th canonical edge at ``n + i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .exceptions import DimensionMismatch
from .graph import Edge, Graph
from .resistance import ResistanceMatrix


@dataclass(frozen=True, eq=False)
class LiftedResistance:
    omega: ResistanceMatrix
    # None for an original vertex, else the parent edge (k, l)
    vertex_map: tuple[Optional[Edge], ...]

    @property
    def base_order(self) -> int:
        return sum(1 for p in self.vertex_map if p is None)


def _blocks(g: Graph, omega: ResistanceMatrix):
    if omega.order != g.n:
        raise DimensionMismatch(f"resistance matrix has order {omega.order}, graph has {g.n} vertices")
    W = omega.entries
    ends = np.array(g.edges, dtype=np.intp).reshape(-1, 2)
    k, l = ends[:, 0], ends[:, 1]
    w = W[k, l]
    # endpoint sums: to_base[i, j] = W[k_i, j] + W[l_i, j]
    to_base = W[k, :] + W[l, :]
    # between[i, j] = W[k_i, p_j] + W[k_i, q_j] + W[l_i, p_j] + W[l_i, q_j]
    between = to_base[:, k] + to_base[:, l]
    return W, w, to_base, between


def _assemble(g: Graph, vv, iv, ii) -> LiftedResistance:
    n, m = g.n, g.m
    dtype = object if vv.dtype == object else float
    out = np.empty((n + m, n + m), dtype=dtype)
    out[:n, :n] = vv
    out[n:, :n] = iv
    out[:n, n:] = iv.T
    out[n:, n:] = ii
    np.fill_diagonal(out, Fraction(0) if dtype is object else 0.0)
    return LiftedResistance(ResistanceMatrix(out), (None,) * n + tuple(g.edges))


def lift_subdivision(g: Graph, omega: ResistanceMatrix) -> LiftedResistance:
    """Resistances in S(G).

    original-original:  2 W_ij
    inserted-original:  (1 + 2 W_kj + 2 W_lj - W_kl) / 2
    inserted-inserted:  (2 + W_pk + W_qk + W_pl + W_ql - W_kl - W_pq) / 2

    The inserted-original rule also covers ``j`` equal to an endpoint.
    """
    W, w, to_base, between = _blocks(g, omega)
    vv = 2 * W
    iv = (1 + 2 * to_base - w[:, None]) / 2
    ii = (2 + between - w[:, None] - w[None, :]) / 2
    return _assemble(g, vv, iv, ii)


def lift_triangulation(g: Graph, omega: ResistanceMatrix) -> LiftedResistance:
    """Resistances in T(G).

    original-original:  2 W_ij / 3
    inserted-original:  1/2 + (W_kj + W_lj) / 3 - W_kl / 6
    inserted-inserted:  1 + (W_pk + W_qk + W_pl + W_ql - W_kl - W_pq) / 6
    """
    W, w, to_base, between = _blocks(g, omega)
    vv = 2 * W / 3
    # integer numerators keep Fraction entries exact
    iv = (3 + 2 * to_base - w[:, None]) / 6
    ii = (6 + between - w[:, None] - w[None, :]) / 6
    return _assemble(g, vv, iv, ii)


def _sum(values):
    values = np.asarray(values).ravel()
    if values.dtype == object:
        return sum(values.tolist(), Fraction(0))
    return math.fsum(values)


def partial_sums_subdivision(g: Graph, lifted: LiftedResistance) -> tuple:
    """Block sums of the subdivision resistance matrix.

    Returns ``(sum_{i in V', j in V} W_ij, sum_{i in V', j in V} d_j W_ij,
    sum_{{i,j} in V'} W_ij)`` with ``d_j`` the degree in ``g``.
    """
    n, m = g.n, g.m
    if lifted.omega.order != n + m:
        raise DimensionMismatch(f"lifted matrix has order {lifted.omega.order}, expected {n + m}")
    W = lifted.omega.entries
    iv = W[n:, :n]
    deg = np.array(g.degrees, dtype=np.int64)
    if iv.dtype == object:
        deg = deg.astype(object)
    iu, ju = np.triu_indices(m, k=1)
    return _sum(iv), _sum(iv * deg[None, :]), _sum(W[n:, n:][iu, ju])


def expected_partial_sums(n: int, m: int, triple) -> tuple:
    """Closed forms for :func:`partial_sums_subdivision` in terms of G."""
    _, additive, multiplicative = triple
    return (
        additive + Fraction(m * n - n * n + n, 2),
        2 * multiplicative + m * m - m * (n - 1),
        multiplicative * Fraction(1, 2) + Fraction(m * (m - n), 2),
    )
