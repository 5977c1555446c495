"""Command-line interface.

Exit codes separate mathematics from plumbing: 0 means accepted (or all
checks passed), 1 means mathematically rejected, 2 means unusable input
or usage error, 3 means the normalization search spent its budget.
Identical invocations produce byte-identical output; reports go to
stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import euler_cut_balance
from .census import CensusBounds, DEFAULT_KINDS, census_csv_lines, run_census
from .dynamics import (
    is_irreducible,
    matrix_literal,
    normalize_matrix,
    parse_matrix_literal,
)
from .errors import BudgetExhaustedError, LgdParseError, LyapgraphError
from .gf2 import bowen_franks_mod2, k_invariant
from .lgd import emit_report, parse_lgd
from .realizability import (
    Model,
    check_ns_s1s2,
    check_ns_s3,
    check_smale_s3,
    classify_singular_vertices,
    homological_bounds,
    HomologyBoundsInput,
    knot_complement_bounds,
)

_CHECKERS = {
    Model.NS_S3.value: check_ns_s3,
    Model.SMALE_S3.value: check_smale_s3,
    Model.NS_S1XS2.value: check_ns_s1s2,
}


def _load_graph(path: str):
    return parse_lgd(Path(path).read_text(encoding="utf-8"))


def _cmd_check(args) -> int:
    graph = _load_graph(args.file)
    verdict = _CHECKERS[args.model](graph)
    sys.stdout.write(emit_report(verdict, mode="machine" if args.machine else "human"))
    return 0 if verdict.accepted else 1


def _cmd_matrix(args) -> int:
    matrix = parse_matrix_literal(args.matrix)
    if args.invariant == "k":
        print(f"k = {k_invariant(matrix).k}")
    elif args.invariant == "bf2":
        dim_hu, dim_hu_plus_1 = bowen_franks_mod2(matrix)
        print(f"dim_Hu = {dim_hu}")
        print(f"dim_Hu_plus_1 = {dim_hu_plus_1}")
    else:
        print(f"irreducible = {'true' if is_irreducible(matrix) else 'false'}")
    return 0


def _cmd_normalize(args) -> int:
    matrix = parse_matrix_literal(args.matrix)
    result, cert = normalize_matrix(matrix, args.target, budget=args.budget)
    print(f"normalized = {matrix_literal(result)}")
    print(f"steps = {len(cert)}")
    text = cert.to_text()
    if text:
        print(text)
    return 0


def _cmd_census(args) -> int:
    bounds = CensusBounds(
        max_vertices=args.max_vertices,
        max_parallel_edges=args.max_parallel,
        max_matrix_size=args.max_matrix_size,
        max_matrix_entry=args.max_entry,
        max_weight=args.max_weight,
        kinds=tuple(args.kinds.split(",")),
    )
    result = run_census(bounds)
    lines = "\n".join(census_csv_lines(result.rows)) + "\n"
    if args.out:
        Path(args.out).write_text(lines, encoding="utf-8")
    else:
        sys.stdout.write(lines)
    sys.stderr.write(result.summary.to_text() + "\n")
    return 0


def _cmd_cuts(args) -> int:
    graph = _load_graph(args.file)
    report = euler_cut_balance(graph)
    for entry in report.entries:
        lower = ",".join(entry.cut.lower)
        edges = ",".join(e.id for e in entry.cut.cut_edges)
        state = "balanced" if entry.balanced else "unbalanced"
        print(f"cut lower={{{lower}}} edges=[{edges}] chi_sum={entry.chi_sum} {state}")
    print(f"all-balanced: {'true' if report.all_balanced else 'false'}")
    return 0 if report.all_balanced else 1


def _cmd_singular(args) -> int:
    graph = _load_graph(args.file)
    flags = classify_singular_vertices(graph)
    forced = [v for v, flagged in flags if flagged]
    for v, flagged in flags:
        print(f"vertex {v}: {'singular-forced' if flagged else 'ok'}")
    print(f"forced-count: {len(forced)}")
    return 0 if not forced else 1


def _cmd_bounds(args) -> int:
    if args.knot_complement and args.dims:
        raise ValueError("--knot-complement and --dims are mutually exclusive")
    if args.knot_complement:
        report = knot_complement_bounds(
            args.e_plus, args.e_minus, args.k, args.dim_h1_m
        )
    elif args.dims:
        parts = [int(x) for x in args.dims.split(",")]
        if len(parts) != 5:
            raise ValueError(
                "--dims wants five integers: dimH1(M),dimH1(Y),dimH2(Y),"
                "dimH1(Z),dimH2(Z)"
            )
        report = homological_bounds(
            HomologyBoundsInput(
                e_plus=args.e_plus,
                e_minus=args.e_minus,
                k=args.k,
                dim_h1_m=parts[0],
                dim_h1_y=parts[1],
                dim_h2_y=parts[2],
                dim_h1_z=parts[3],
                dim_h2_z=parts[4],
            )
        )
    else:
        raise ValueError("give either --knot-complement or --dims")
    for check in report.checks:
        state = "pass" if check.passed else "fail"
        print(f"{check.code}: {check.description}: {check.lhs} <= {check.rhs}: {state}")
    print(f"all-pass: {'true' if report.all_pass else 'false'}")
    return 0 if report.all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lyapgraph",
        description="Realizability checks, matrix invariants and a census"
        " for abstract Lyapunov graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check one .lgd graph against a flow model")
    p.add_argument("--model", required=True, choices=sorted(_CHECKERS))
    p.add_argument("--machine", action="store_true", help="machine-readable report")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("matrix", help="invariants of a matrix literal")
    p.add_argument("invariant", choices=["k", "bf2", "irreducible"])
    p.add_argument("matrix", help='rows split by ";", entries by ",", e.g. "0,1;1,0"')
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser(
        "normalize",
        help="search for a split-conjugate matrix with entries above a"
        " threshold and even off-diagonals",
    )
    p.add_argument("--target", required=True, type=int)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("matrix")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("census", help="enumerate and classify small graphs")
    p.add_argument("--max-vertices", required=True, type=int)
    p.add_argument("--max-parallel", type=int, default=2)
    p.add_argument("--max-matrix-size", type=int, default=2)
    p.add_argument("--max-entry", type=int, default=2)
    p.add_argument("--max-weight", type=int, default=2)
    p.add_argument("--kinds", default=",".join(DEFAULT_KINDS))
    p.add_argument("--out", help="write the CSV table to a file")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("cuts", help="Euler-characteristic balance of all cuts")
    p.add_argument("file")
    p.set_defaults(func=_cmd_cuts)

    p = sub.add_parser("singular", help="list vertices forced to be singular")
    p.add_argument("file")
    p.set_defaults(func=_cmd_singular)

    p = sub.add_parser("bounds", help="homological bounds for one vertex")
    p.add_argument("--e-plus", required=True, type=int)
    p.add_argument("--e-minus", required=True, type=int)
    p.add_argument("--k", required=True, type=int)
    p.add_argument(
        "--knot-complement",
        action="store_true",
        help="preset: every piece above and below is a knot complement",
    )
    p.add_argument("--dim-h1-m", type=int, default=0, help="dimH1 of the manifold")
    p.add_argument("--dims", help="dimH1(M),dimH1(Y),dimH2(Y),dimH1(Z),dimH2(Z)")
    p.set_defaults(func=_cmd_bounds)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExhaustedError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except LgdParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (LyapgraphError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
