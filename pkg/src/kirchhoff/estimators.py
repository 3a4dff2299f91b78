"""scikit-learn style wrappers.

``GraphOperator`` maps graphs to transformed graphs, ``KirchhoffFeatures``
maps graphs to ``(R, R+, R*)`` rows, ``ResistanceDistance`` fits one graph
and predicts resistances for vertex pairs. They compose in a
:class:`sklearn.pipeline.Pipeline`.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .closed_forms import (
    ClosedFormInput,
    iterated_subdivision_closed_forms,
    iterated_triangulation_closed_forms,
)
from .exceptions import GraphInputError
from .graph import Graph, TransformKind, from_edge_list, iterate_transform
from .invariants import compute_invariants
from .resistance import NumericBackend, resistance_matrix


def check_graph(obj) -> Graph:
    """Coerce ``obj`` into a validated :class:`Graph`.

    Accepts a ``Graph``, a ``(pairs, vertex_count)`` tuple, or a bare
    sequence of pairs (vertex count inferred as ``max id + 1``).
    """
    if isinstance(obj, Graph):
        return obj
    if (isinstance(obj, tuple) and len(obj) == 2 and isinstance(obj[1], (int, np.integer))
            and not isinstance(obj[0], (int, np.integer))):
        return from_edge_list(obj[0], int(obj[1]))
    try:
        pairs = [tuple(int(x) for x in p) for p in obj]
    except TypeError:
        raise GraphInputError(f"cannot interpret {type(obj).__name__} as a graph") from None
    if any(len(p) != 2 for p in pairs):
        raise GraphInputError("edge list entries must be pairs")
    n = max((max(p) for p in pairs), default=-1) + 1
    return from_edge_list(pairs, n)


def check_graphs(X) -> list[Graph]:
    if isinstance(X, Graph):
        raise GraphInputError("expected a sequence of graphs, got a single Graph")
    return [check_graph(g) for g in X]


class GraphOperator(TransformerMixin, BaseEstimator):
    """Apply the subdivision (``"S"``) or triangulation (``"T"``) ``k`` times."""

    def __init__(self, kind="S", k=1, vertex_cap=None):
        self.kind = kind
        self.k = k
        self.vertex_cap = vertex_cap

    def fit(self, X, y=None):
        self.kind_ = TransformKind.parse(self.kind)
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")
        check_graphs(X)
        return self

    def transform(self, X) -> list[Graph]:
        check_is_fitted(self, "kind_")
        return [iterate_transform(g, self.kind_, self.k, cap=self.vertex_cap) for g in check_graphs(X)]


class KirchhoffFeatures(TransformerMixin, BaseEstimator):
    """Graphs -> array of shape ``(n_graphs, 3)`` holding ``R, R+, R*``.

    With ``kind`` set, the features describe the ``k``-th iterate of each
    graph. ``method="closed_form"`` evaluates them from the base graph
    alone; ``method="oracle"`` materializes the iterate and inverts its
    Laplacian.
    """

    feature_names = ("kirchhoff", "additive", "multiplicative")

    def __init__(self, kind=None, k=1, method="closed_form", backend="float"):
        self.kind = kind
        self.k = k
        self.method = method
        self.backend = backend

    def fit(self, X, y=None):
        if self.method not in ("closed_form", "oracle"):
            raise ValueError(f"method must be 'closed_form' or 'oracle', got {self.method!r}")
        self.backend_ = NumericBackend.parse(self.backend)
        self.kind_ = None if self.kind is None else TransformKind.parse(self.kind)
        check_graphs(X)
        self.n_features_out_ = 3
        return self

    def _features(self, g: Graph):
        if self.kind_ is None or self.k == 0:
            return tuple(compute_invariants(g, resistance_matrix(g, self.backend_)))
        if self.method == "oracle":
            gk = iterate_transform(g, self.kind_, self.k)
            return tuple(compute_invariants(gk, resistance_matrix(gk, self.backend_)))
        base = compute_invariants(g, resistance_matrix(g, self.backend_))
        inp = ClosedFormInput.from_graph(g, base)
        if self.kind_ is TransformKind.SUBDIVISION:
            return tuple(iterated_subdivision_closed_forms(inp, self.k))
        return tuple(iterated_triangulation_closed_forms(inp, self.k))

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "backend_")
        rows = [self._features(g) for g in check_graphs(X)]
        dtype = object if self.backend_.exact else float
        return np.array(rows, dtype=dtype).reshape(-1, 3)

    def get_feature_names_out(self, input_features=None):
        return np.array(self.feature_names, dtype=object)


class ResistanceDistance(BaseEstimator):
    """Fit on one graph; ``predict`` resistances for ``(i, j)`` pairs."""

    def __init__(self, backend="float"):
        self.backend = backend

    def fit(self, X, y=None):
        g = check_graph(X)
        self.graph_ = g
        self.resistance_ = resistance_matrix(g, NumericBackend.parse(self.backend))
        self.n_vertices_ = g.n
        return self

    def predict(self, pairs: Sequence[Sequence[int]]) -> np.ndarray:
        check_is_fitted(self, "resistance_")
        idx = np.asarray(pairs, dtype=np.intp).reshape(-1, 2)
        if idx.size and (idx.min() < 0 or idx.max() >= self.n_vertices_):
            raise IndexError(f"vertex ids must lie in [0, {self.n_vertices_})")
        return self.resistance_.entries[idx[:, 0], idx[:, 1]]

    def kirchhoff_index(self):
        check_is_fitted(self, "resistance_")
        return compute_invariants(self.graph_, self.resistance_).kirchhoff
