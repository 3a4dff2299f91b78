from fractions import Fraction

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import Pipeline

from conftest import brute_invariants, pinv_resistance
from kirchhoff.estimators import (
    GraphOperator,
    KirchhoffFeatures,
    ResistanceDistance,
    check_graph,
    check_graphs,
)
from kirchhoff.exceptions import GraphInputError, SizeOverflow
from kirchhoff.graph import complete_graph, cycle_graph, path_graph


def graphs(corpus, limit=15):
    return [g for _, g in corpus[:limit]]


class TestCheckGraph:
    def test_accepts_graph(self):
        g = path_graph(3)
        assert check_graph(g) is g

    def test_accepts_pairs_with_count(self):
        assert check_graph(([(0, 1), (1, 2)], 3)) == path_graph(3)

    def test_accepts_bare_pairs(self):
        assert check_graph([(0, 1), (1, 2), (2, 0)]) == complete_graph(3)
        assert check_graph(np.array([[0, 1], [1, 2]])) == path_graph(3)

    def test_rejects_garbage(self):
        with pytest.raises(GraphInputError):
            check_graph(5)
        with pytest.raises(GraphInputError):
            check_graph([(0, 1, 2)])

    def test_check_graphs_rejects_single_graph(self):
        with pytest.raises(GraphInputError):
            check_graphs(path_graph(2))


def test_params_and_clone():
    est = KirchhoffFeatures(kind="T", k=2, method="oracle")
    assert est.get_params() == {"kind": "T", "k": 2, "method": "oracle", "backend": "float"}
    twin = clone(est)
    assert twin.get_params() == est.get_params() and twin is not est
    op = GraphOperator(kind="S", k=3).set_params(k=1)
    assert op.k == 1


def test_not_fitted():
    with pytest.raises(NotFittedError):
        KirchhoffFeatures().transform([path_graph(2)])
    with pytest.raises(NotFittedError):
        GraphOperator().transform([path_graph(2)])
    with pytest.raises(NotFittedError):
        ResistanceDistance().predict([(0, 1)])


def test_plain_features_match_brute(corpus):
    gs = graphs(corpus)
    X = KirchhoffFeatures().fit_transform(gs)
    assert X.shape == (len(gs), 3)
    np.testing.assert_allclose(X, [brute_invariants(g) for g in gs], rtol=1e-9)


@pytest.mark.parametrize("kind, k", [("S", 1), ("S", 2), ("T", 1), ("T", 2)])
def test_closed_form_matches_oracle_method(corpus, kind, k):
    gs = graphs(corpus)
    cf = KirchhoffFeatures(kind=kind, k=k).fit_transform(gs)
    orc = KirchhoffFeatures(kind=kind, k=k, method="oracle").fit_transform(gs)
    np.testing.assert_allclose(cf, orc, rtol=1e-9)


def test_pipeline_operator_then_features(corpus):
    gs = graphs(corpus)
    pipe = Pipeline([("op", GraphOperator(kind="T", k=1)), ("feat", KirchhoffFeatures())])
    direct = KirchhoffFeatures(kind="T", k=1).fit_transform(gs)
    np.testing.assert_allclose(pipe.fit_transform(gs), direct, rtol=1e-9)


def test_rational_features_exact():
    X = KirchhoffFeatures(kind="T", k=1, backend="rational").fit_transform([complete_graph(3)])
    assert X.dtype == object
    assert tuple(X[0]) == (Fraction(65, 6), 61, 84)


def test_feature_names():
    names = KirchhoffFeatures().fit([path_graph(2)]).get_feature_names_out()
    assert list(names) == ["kirchhoff", "additive", "multiplicative"]


def test_bad_params():
    with pytest.raises(ValueError):
        KirchhoffFeatures(method="magic").fit([path_graph(2)])
    with pytest.raises(ValueError):
        GraphOperator(kind="Q").fit([path_graph(2)])
    with pytest.raises(ValueError):
        GraphOperator(k=-1).fit([path_graph(2)])


def test_operator_respects_cap():
    op = GraphOperator(kind="S", k=5, vertex_cap=20).fit([path_graph(2)])
    with pytest.raises(SizeOverflow):
        op.transform([complete_graph(4)])


def test_operator_sizes():
    out = GraphOperator(kind="T", k=2).fit_transform([path_graph(2)])
    assert (out[0].n, out[0].m) == (6, 9)


class TestResistanceDistance:
    def test_predict_matches_pinv(self):
        g = cycle_graph(7)
        est = ResistanceDistance().fit(g)
        pairs = [(0, 3), (2, 5), (1, 1)]
        W = pinv_resistance(g)
        np.testing.assert_allclose(est.predict(pairs), [W[i, j] for i, j in pairs], atol=1e-12)

    def test_kirchhoff_index(self):
        assert ResistanceDistance(backend="rational").fit(cycle_graph(5)).kirchhoff_index() == 10

    def test_out_of_range(self):
        est = ResistanceDistance().fit(path_graph(3))
        with pytest.raises(IndexError):
            est.predict([(0, 3)])

    def test_fitted_attributes(self):
        est = ResistanceDistance().fit([(0, 1), (1, 2)])
        assert est.n_vertices_ == 3 and est.graph_ == path_graph(3)
