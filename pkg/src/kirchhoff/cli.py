"""``kirchhoff`` command line.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .exceptions import GraphInputError, ResourceCapError
from .graph import TransformKind, iterate_transform, read_edge_list, write_edge_list
from .invariants import compute_invariants
from .resistance import NumericBackend, resistance_matrix
from .verify import builtin_corpus, verify

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _number(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return float(x)


def cmd_compute(args) -> int:
    g = read_edge_list(args.file)
    backend = NumericBackend.parse(args.backend)
    omega = resistance_matrix(g, backend)
    triple = compute_invariants(g, omega)
    out = {"n": g.n, "m": g.m, "R": _number(triple.kirchhoff),
           "R_plus": _number(triple.additive), "R_star": _number(triple.multiplicative)}
    if backend.exact:
        out["exact"] = {"R": str(triple.kirchhoff), "R_plus": str(triple.additive),
                        "R_star": str(triple.multiplicative)}
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(omega.to_csv())
    print(json.dumps(out))
    return EXIT_OK


def cmd_transform(args) -> int:
    g = read_edge_list(args.file)
    kind = TransformKind.parse(args.op)
    gk = iterate_transform(g, kind, args.k, cap=args.vertex_cap)
    write_edge_list(gk, args.out, comments=[
        f"kirchhoff transform op={kind.value} k={args.k} base_n={g.n} base_m={g.m}",
    ])
    print(f"wrote {args.out}: {gk.n} vertices, {gk.m} edges")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.builtin == bool(args.file):
        print("error: give exactly one of <file> or --builtin", file=sys.stderr)
        return EXIT_INPUT
    backend = NumericBackend.parse(args.backend)
    if args.builtin:
        graphs = builtin_corpus()
    else:
        graphs = [(args.file, read_edge_list(args.file))]
    report = verify(graphs, backend, args.tol, args.max_k_s, args.max_k_t,
                    cap=args.vertex_cap, jobs=args.jobs,
                    report_id="builtin" if args.builtin else args.file)
    print(report.format_table())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kirchhoff",
        description="Resistance distances and Kirchhoffian invariants of graphs, "
                    "their subdivisions and triangulations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print n, m, R, R+, R* as JSON")
    p.add_argument("file")
    p.add_argument("--backend", choices=["float", "rational"], default="float")
    p.add_argument("--csv", metavar="PATH", help="also write the resistance matrix as CSV")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("transform", help="write S^k(G) or T^k(G) as an edge list")
    p.add_argument("file")
    p.add_argument("--op", choices=["s", "t", "S", "T"], required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--out", required=True)
    p.add_argument("--vertex-cap", type=int, default=None,
                   help="refuse iterates with more vertices (default $KIRCHHOFF_VERTEX_CAP or 10^6)")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="check closed forms against the oracle")
    p.add_argument("file", nargs="?")
    p.add_argument("--builtin", action="store_true", help="run the built-in corpus")
    p.add_argument("--max-k-s", type=int, default=3)
    p.add_argument("--max-k-t", type=int, default=2)
    p.add_argument("--tol", type=float, default=None, help="relative tolerance (default 1e-9)")
    p.add_argument("--backend", choices=["float", "rational"], default="float")
    p.add_argument("--json", metavar="PATH", help="write the JSON report here")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--vertex-cap", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphInputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceCapError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
