"""Compare every closed form against the linear-algebra oracle.

A :class:`VerificationReport` holds one :class:`ReportRow` per
(graph, formula). Rows are sorted by ``(graph_id, formula_name)`` no
matter how the work was scheduled.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .closed_forms import (
    ClosedFormInput,
    iterated_subdivision_closed_forms,
    iterated_triangulation_closed_forms,
    regular_triangulation_kirchhoff,
    st_comparison,
    subdivision_closed_forms,
    triangulation_closed_forms,
)
from .graph import (
    Graph,
    TransformKind,
    complete_graph,
    cycle_graph,
    iterate_transform,
    path_graph,
    random_connected_graph,
    star_graph,
    subdivide,
    triangulate,
)
from .invariants import InvariantTriple, compute_invariants
from .lifting import (
    LiftedResistance,
    expected_partial_sums,
    lift_subdivision,
    lift_triangulation,
    partial_sums_subdivision,
)
from .resistance import BackendKind, NumericBackend, foster_sum, resistance_matrix

SCHEMA = "kirchhoff.verification/1"
BUILTIN_SEED = 42
INVARIANT_NAMES = ("R", "R+", "R*")


@dataclass(frozen=True)
class ReportRow:
    graph_id: str
    formula_name: str
    closed_form_value: float
    oracle_value: float
    abs_residual: float
    rel_residual: float
    passed: bool
    oracle_backend: str = "float"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ReportRow":
        d = dict(d)
        d["passed"] = d.pop("pass")
        return cls(**d)


def make_row(graph_id, name, closed, oracle, tol, backend="float") -> ReportRow:
    """Residuals are computed before any rounding to float."""
    diff = abs(closed - oracle)
    rel = diff / abs(oracle) if oracle != 0 else diff
    return ReportRow(graph_id, name, float(closed), float(oracle), float(diff),
                     float(rel), bool(rel <= tol), backend)


def matrix_row(graph_id, name, predicted: np.ndarray, oracle: np.ndarray, tol, backend) -> ReportRow:
    """Entrywise comparison, reported at the entry with the worst residual."""
    pred = np.asarray(predicted)
    orc = np.asarray(oracle)
    if pred.shape != orc.shape:
        return ReportRow(graph_id, name, float("nan"), float("nan"), float("inf"),
                         float("inf"), False, backend)
    diff = np.abs(pred - orc)
    scale = np.abs(orc)
    # diagonal and other zero entries are judged by absolute residual
    rel = np.where(scale != 0, diff / np.where(scale != 0, scale, 1), diff)
    worst = np.unravel_index(np.argmax(np.asarray(rel, dtype=float)), rel.shape)
    return make_row(graph_id, name, pred[worst], orc[worst], tol, backend)


@dataclass
class VerificationReport:
    graph_id: str
    backend: str
    tolerance: float
    rows: list[ReportRow] = field(default_factory=list)

    def __post_init__(self):
        self.rows = sorted(self.rows, key=lambda r: (r.graph_id, r.formula_name))

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def corpus_summary(self) -> dict:
        n_pass = sum(r.passed for r in self.rows)
        return {
            "graphs": len({r.graph_id for r in self.rows}),
            "rows": len(self.rows),
            "passed": n_pass,
            "failed": len(self.rows) - n_pass,
        }

    def failures(self) -> list[ReportRow]:
        return [r for r in self.rows if not r.passed]

    def row(self, graph_id: str, formula_name: str) -> ReportRow:
        for r in self.rows:
            if r.graph_id == graph_id and r.formula_name == formula_name:
                return r
        raise KeyError((graph_id, formula_name))

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "graph_id": self.graph_id,
            "backend": {"kind": self.backend, "tolerance": self.tolerance},
            "rows": [r.to_dict() for r in self.rows],
            "corpus_summary": self.corpus_summary,
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        report = cls(
            d["graph_id"],
            d["backend"]["kind"],
            float(d["backend"]["tolerance"]),
            [ReportRow.from_dict(r) for r in d["rows"]],
        )
        if report.corpus_summary != d["corpus_summary"]:
            raise ValueError("corpus_summary does not match rows")
        return report

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    def format_table(self) -> str:
        header = f"{'graph':<8} {'formula':<24} {'closed form':>20} {'oracle':>20} {'rel resid':>10}  ok"
        lines = [header, "-" * len(header)]
        for r in self.rows:
            lines.append(
                f"{r.graph_id:<8} {r.formula_name:<24} {r.closed_form_value:>20.12g} "
                f"{r.oracle_value:>20.12g} {r.rel_residual:>10.2e}  {'PASS' if r.passed else 'FAIL'}"
            )
        s = self.corpus_summary
        lines.append(f"{s['graphs']} graph(s), {s['rows']} rows: {s['passed']} passed, {s['failed']} failed")
        return "\n".join(lines)


# -- oracle helpers ------------------------------------------------------------

def _oracle_backend(backend: NumericBackend, order: int) -> NumericBackend:
    """Rational when requested and affordable, float otherwise."""
    if backend.exact and not backend.supports(order):
        return NumericBackend(BackendKind.FLOAT, backend.tolerance)
    return backend


class _Oracle:
    """Caches oracle resistance matrices and invariants per materialized graph."""

    def __init__(self, backend: NumericBackend):
        self.backend = backend
        self._cache = {}

    def omega(self, g: Graph):
        key = (g.n, g.edges)
        if key not in self._cache:
            b = _oracle_backend(self.backend, g.n)
            om = resistance_matrix(g, b)
            self._cache[key] = (om, compute_invariants(g, om), b.kind.value)
        return self._cache[key]


def _triple_rows(gid, template, closed: InvariantTriple, oracle: InvariantTriple, tol, bname):
    return [
        make_row(gid, template.format(name), c, o, tol, bname)
        for name, c, o in zip(INVARIANT_NAMES, closed, oracle)
    ]


def verify_graph(
    g: Graph,
    graph_id: str,
    backend=None,
    tolerance: Optional[float] = None,
    max_k_s: int = 3,
    max_k_t: int = 2,
    cap: Optional[int] = None,
) -> list[ReportRow]:
    """All verification rows for one base graph."""
    backend = NumericBackend.parse(backend)
    tol = backend.tolerance if tolerance is None else tolerance
    oracle = _Oracle(backend)
    rows: list[ReportRow] = []

    omega, base, bname = oracle.omega(g)
    inp = ClosedFormInput.from_graph(g, base)
    n, m = g.n, g.m

    rows.append(make_row(graph_id, "foster", n - 1, foster_sum(g, omega), tol, bname))

    sg, tg = subdivide(g), triangulate(g)
    om_s, inv_s, b_s = oracle.omega(sg)
    om_t, inv_t, b_t = oracle.omega(tg)

    lift_s = lift_subdivision(g, omega)
    lift_t = lift_triangulation(g, omega)
    rows.append(matrix_row(graph_id, "lift(S)", lift_s.omega.entries, om_s.entries, tol, b_s))
    rows.append(matrix_row(graph_id, "lift(T)", lift_t.omega.entries, om_t.entries, tol, b_t))

    # resistances in T(G) from those in S(G): scale by 1/3, shift by block
    offset = np.zeros((n + m, n + m), dtype=object)
    offset[n:, :n] = Fraction(1, 3)
    offset[:n, n:] = Fraction(1, 3)
    offset[n:, n:] = Fraction(2, 3)
    np.fill_diagonal(offset, 0)
    if not om_s.exact:
        offset = offset.astype(float)
    related = om_s.entries / 3 + offset
    rows.append(matrix_row(graph_id, "S-T resistance relation", related, om_t.entries, tol, b_t))

    oracle_partials = partial_sums_subdivision(g, LiftedResistance(om_s, lift_s.vertex_map))
    for name, c, o in zip(("partial(V'xV)", "partial(V'xV,deg)", "partial(V'xV')"),
                          expected_partial_sums(n, m, base), oracle_partials):
        rows.append(make_row(graph_id, name, c, o, tol, b_s))

    rows += _triple_rows(graph_id, "{}(S)", subdivision_closed_forms(inp), inv_s, tol, b_s)
    rows += _triple_rows(graph_id, "{}(T)", triangulation_closed_forms(inp), inv_t, tol, b_t)
    rows += _triple_rows(graph_id, "{}(T) via S", st_comparison(subdivision_closed_forms(inp), n, m),
                         inv_t, tol, b_t)

    for kind, max_k, fn in ((TransformKind.SUBDIVISION, max_k_s, iterated_subdivision_closed_forms),
                            (TransformKind.TRIANGULATION, max_k_t, iterated_triangulation_closed_forms)):
        for k in range(1, max_k + 1):
            gk = iterate_transform(g, kind, k, cap=cap)
            _, inv_k, b_k = oracle.omega(gk)
            rows += _triple_rows(graph_id, "{}(" + f"{kind.value}^{k})", fn(inp, k), inv_k, tol, b_k)

    r = g.is_regular()
    if r is not None:
        R = base.kirchhoff
        rows.append(make_row(graph_id, "regular R+=2rR", 2 * r * R, base.additive, tol, bname))
        rows.append(make_row(graph_id, "regular R*=r^2R", r * r * R, base.multiplicative, tol, bname))
        rows.append(make_row(graph_id, "regular R(T)", regular_triangulation_kirchhoff(n, r, R),
                             inv_t.kirchhoff, tol, b_t))
    return rows


def verify(
    graphs: Iterable[tuple[str, Graph]],
    backend=None,
    tolerance: Optional[float] = None,
    max_k_s: int = 3,
    max_k_t: int = 2,
    cap: Optional[int] = None,
    jobs: int = 1,
    report_id: Optional[str] = None,
) -> VerificationReport:
    backend = NumericBackend.parse(backend)
    tol = backend.tolerance if tolerance is None else tolerance
    graphs = list(graphs)

    def one(item):
        gid, g = item
        return verify_graph(g, gid, backend, tol, max_k_s, max_k_t, cap)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(one, graphs))
    else:
        chunks = [one(item) for item in graphs]
    rows = [r for chunk in chunks for r in chunk]
    if report_id is None:
        report_id = graphs[0][0] if len(graphs) == 1 else "builtin"
    return VerificationReport(report_id, backend.kind.value, tol, rows)


def builtin_corpus(seed: int = BUILTIN_SEED, n_random: int = 20) -> list[tuple[str, Graph]]:
    """Paths, cycles, stars, complete graphs and seeded random connected graphs."""
    corpus = [(f"P{n}", path_graph(n)) for n in range(2, 9)]
    corpus += [(f"C{n}", cycle_graph(n)) for n in range(3, 9)]
    corpus += [(f"K1,{k}", star_graph(k)) for k in range(3, 7)]
    corpus += [(f"K{n}", complete_graph(n)) for n in range(3, 7)]
    rng = np.random.default_rng(seed)
    for i in range(n_random):
        n = int(rng.integers(3, 11))
        p = float(rng.uniform(0.1, 0.6))
        corpus.append((f"rand{i:02d}", random_connected_graph(n, p, rng)))
    return corpus


def corpus_subset(ids: Sequence[str]) -> list[tuple[str, Graph]]:
    wanted = set(ids)
    return [(gid, g) for gid, g in builtin_corpus() if gid in wanted]
