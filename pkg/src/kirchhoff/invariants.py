"""Kirchhoff index and the additive / multiplicative degree-Kirchhoff indices."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number

import numpy as np

from .exceptions import DimensionMismatch
from .graph import Graph
from .resistance import ResistanceMatrix, resistance_matrix


@dataclass(frozen=True)
class InvariantTriple:
    """``(R, R+, R*)`` of one graph; entries are floats or Fractions."""

    kirchhoff: Number
    additive: Number
    multiplicative: Number

    def __iter__(self):
        return iter((self.kirchhoff, self.additive, self.multiplicative))

    def as_tuple(self) -> tuple:
        return tuple(self)

    @property
    def exact(self) -> bool:
        return all(isinstance(x, (int, Fraction)) for x in self)

    def to_dict(self) -> dict:
        return {"R": float(self.kirchhoff), "R_plus": float(self.additive),
                "R_star": float(self.multiplicative)}


def _pair_sum(values):
    if values.dtype == object:
        return sum(values.tolist(), Fraction(0))
    return math.fsum(values)


def compute_invariants(g: Graph, omega: ResistanceMatrix) -> InvariantTriple:
    """Sum ``Omega_ij``, ``(d_i + d_j) Omega_ij`` and ``d_i d_j Omega_ij`` over pairs.

    Pairs are visited in lexicographic order and float sums use
    :func:`math.fsum`, so results are reproducible bit for bit.
    """
    if omega.order != g.n:
        raise DimensionMismatch(f"resistance matrix has order {omega.order}, graph has {g.n} vertices")
    iu, ju = np.triu_indices(g.n, k=1)
    vals = omega.entries[iu, ju]
    deg = np.array(g.degrees, dtype=np.int64)
    di, dj = deg[iu], deg[ju]
    if vals.dtype == object:
        di, dj = di.astype(object), dj.astype(object)
    return InvariantTriple(
        _pair_sum(vals),
        _pair_sum((di + dj) * vals),
        _pair_sum(di * dj * vals),
    )


def invariants_of(g: Graph, backend=None) -> InvariantTriple:
    """Oracle invariants: resistance matrix by linear algebra, then the sums."""
    return compute_invariants(g, resistance_matrix(g, backend))
