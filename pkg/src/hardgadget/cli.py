"""Command-line entry point wiring every pipeline stage.

Exit codes: 0 success, 1 infeasible/failure verdict, 2 input error, 3 timeout.
All floating output uses 12 significant digits and '.' as decimal separator.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import cc_engine, cc_reduction, gaussian, generators, hc_engine, hc_reduction
from .instances import (
    Coloring,
    ParseError,
    ValidationError,
    parse_instance,
    serialize_instance,
)

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_INPUT = 2
EXIT_TIMEOUT = 3

DEFAULT_RHO = -0.7
DEFAULT_T = 3
DEFAULT_BUDGET = 60.0
DEFAULT_TOLERANCE = 1e-10


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _default_threads() -> int:
    env = os.environ.get("HARDGADGET_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _parse_q(text: str) -> float:
    if text == "inf":
        return math.inf
    return float(text)


def _load_layout(path: str) -> cc_reduction.GadgetLayout:
    return cc_reduction.parse_layout(_read(path))


# ---------------------------------------------------------------------------
# subcommand handlers (each returns an exit code)


def _cmd_gen_h3(args) -> int:
    h = generators.gen_h3(args.n, args.m, args.seed, args.mode)
    _write(args.out, serialize_instance(h))
    return EXIT_OK


def _cmd_reduce_cc(args) -> int:
    h = parse_instance(_read(args.input), "h3")
    g, layout = cc_reduction.reduce_cc(h)
    _write(args.out, serialize_instance(g))
    if args.layout_out:
        _write(args.layout_out, cc_reduction.serialize_layout(layout))
    return EXIT_OK


def _cmd_solve_cc(args) -> int:
    g = parse_instance(_read(args.input), "sg")
    partition, value = cc_engine.cc_opt_bruteforce(g, args.q)
    print(f"value {value if args.q == math.inf else _fmt(value)}")
    if args.out:
        _write(args.out, serialize_instance(partition))
    return EXIT_OK


def _cmd_feasible_cc(args) -> int:
    g = parse_instance(_read(args.input), "sg")
    result = cc_engine.feasible_linf(g, args.t, args.budget)
    print(f"verdict {result.status}")
    if result.status == "timeout":
        return EXIT_TIMEOUT
    if not result.feasible:
        return EXIT_VERDICT
    if args.out:
        _write(args.out, serialize_instance(result.partition))
    return EXIT_OK


def _cmd_yes_cc(args) -> int:
    h = parse_instance(_read(args.input), "h3")
    if args.coloring:
        coloring = parse_instance(_read(args.coloring), "col")
    else:
        coloring = cc_engine.find_two_coloring(h)
        if coloring is None:
            print("verdict not-2-colorable")
            return EXIT_VERDICT
    g, layout = cc_reduction.reduce_cc(h)
    partition = cc_engine.yes_clustering(h, coloring, layout)
    _write(args.out, serialize_instance(partition))
    if args.graph_out:
        _write(args.graph_out, serialize_instance(g))
    if args.layout_out:
        _write(args.layout_out, cc_reduction.serialize_layout(layout))
    return EXIT_OK


def _cmd_decode_cc(args) -> int:
    partition = parse_instance(_read(args.input), "p")
    layout = _load_layout(args.layout)
    decoded = cc_engine.decode_coloring(partition, layout)
    if isinstance(decoded, cc_engine.DecodeFailure):
        print(f"verdict failure flower {decoded.flower}: {decoded.reason}")
        return EXIT_VERDICT
    _write(args.out, serialize_instance(decoded))
    return EXIT_OK


def _cmd_verify_lemmas(args) -> int:
    g = parse_instance(_read(args.graph), "sg")
    partition = parse_instance(_read(args.input), "p")
    layout = _load_layout(args.layout)
    report = cc_engine.verify_lemmas(g, partition, layout)
    _write(args.out, report.to_text())
    return EXIT_OK if report.all_pass() and not report.vacuous else EXIT_VERDICT


def _cmd_gen_lin2(args) -> int:
    inst, planted = generators.gen_lin2(args.q, args.n0, args.m, args.seed, args.mode)
    _write(args.out, serialize_instance(inst))
    if args.assignment_out:
        if planted is None:
            raise ValidationError("--assignment-out requires --mode satisfiable")
        _write(args.assignment_out, serialize_instance(planted))
    return EXIT_OK


def _cmd_reduce_hc(args) -> int:
    inst = parse_instance(_read(args.input), "lin2")
    wg = hc_reduction.reduce_hc_exact(inst, args.rho)
    _write(args.out, serialize_instance(wg))
    return EXIT_OK


def _cmd_yes_tree(args) -> int:
    inst = parse_instance(_read(args.input), "lin2")
    assignment = parse_instance(_read(args.assignment), "asg")
    tree = hc_reduction.yes_tree(inst, assignment)
    _write(args.out, serialize_instance(tree))
    if args.report_bound:
        bound = hc_reduction.yes_tree_level_bound(inst, assignment, args.rho)
        print(f"level-series-bound {_fmt(bound)}")
    return EXIT_OK


def _cmd_eval_hc(args) -> int:
    g = parse_instance(_read(args.graph), "wg")
    tree = parse_instance(_read(args.input), "tree")
    raw = hc_engine.hc_value(g, tree)
    print(f"value {_fmt(raw)}")
    print(f"value-per-leaf {_fmt(raw / g.n)}")
    return EXIT_OK


def _cmd_solve_hc(args) -> int:
    g = parse_instance(_read(args.input), "wg")
    tree, value = hc_engine.hc_opt_bruteforce(g)
    print(f"value {_fmt(value)}")
    _write(args.out, serialize_instance(tree))
    return EXIT_OK


def _cmd_gamma(args) -> int:
    if args.grid:
        rows = ["a,b,value"]
        for i in range(args.grid + 1):
            a = i / args.grid
            for j in range(args.grid + 1):
                b = j / args.grid
                value = gaussian.gamma(args.rho, a, b, args.tolerance)
                rows.append(f"{_fmt(a)},{_fmt(b)},{_fmt(value)}")
        _write(args.out, "\n".join(rows) + "\n")
    else:
        print(_fmt(gaussian.gamma(args.rho, args.a, args.b, args.tolerance)))
    return EXIT_OK


_CURVE_HEADERS = {"single": "beta,value", "split": "beta1,beta2,value", "gw": "rho,value"}
_CURVE_RANGES = {"single": (0.6, 0.88), "split": (0.44, 0.88), "gw": (-1.0, 0.0)}


def _curve_eval(task):
    panel, rho, rows = task
    out = []
    for row in rows:
        if panel == "single":
            out.append(row + (hc_engine.no_case_single_bound(row[0], rho),))
        elif panel == "split":
            out.append(row + (hc_engine.no_case_split_bound(row[0], row[1], rho),))
        else:
            out.append(row + (gaussian.gw_curve(row[0]),))
    return out


def _cmd_curves(args) -> int:
    d_lo, d_hi = _CURVE_RANGES[args.panel]
    lo = d_lo if args.lo is None else args.lo
    hi = d_hi if args.hi is None else args.hi
    count = max(1, round((hi - lo) / args.step))
    xs = [lo + (hi - lo) * i / count for i in range(count + 1)]
    if args.panel == "split":
        points = [(x, max(0.0, args.cap - x)) for x in xs]
    else:
        points = [(x,) for x in xs]
    # threads parallelize evaluation of one fixed grid: output is identical
    # for every thread count
    threads = min(args.threads or _default_threads(), len(points))
    if threads > 1:
        size = (len(points) + threads - 1) // threads
        tasks = [
            (args.panel, args.rho, points[i : i + size])
            for i in range(0, len(points), size)
        ]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            evaluated = [row for chunk in pool.map(_curve_eval, tasks) for row in chunk]
    else:
        evaluated = _curve_eval((args.panel, args.rho, points))
    lines = [_CURVE_HEADERS[args.panel]]
    lines += [",".join(_fmt(x) for x in row) for row in evaluated]
    _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_ratio(args) -> int:
    ratio = hc_engine.hardness_ratio()
    print(f"{ratio.no_case_bound} / {ratio.yes_case_bound} = {_fmt(ratio.ratio)}")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardgadget",
        description="Gadget reductions and exact solvers for clustering hardness constructions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        return p

    p = add("gen-h3", _cmd_gen_h3, help="generate a 3-uniform hypergraph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=generators.H3_MODES, default="random")
    p.add_argument("--out", default=None)

    p = add("reduce-cc", _cmd_reduce_cc, help="hypergraph -> signed complete graph")
    p.add_argument("input")
    p.add_argument("--out", default=None)
    p.add_argument("--layout-out", default=None)

    p = add("solve-cc", _cmd_solve_cc, help="optimal clustering by enumeration (n <= 13)")
    p.add_argument("input")
    p.add_argument("--q", type=_parse_q, default=math.inf, help="norm order, or 'inf'")
    p.add_argument("--out", default=None)

    p = add("feasible-cc", _cmd_feasible_cc, help="exact l_inf <= t feasibility")
    p.add_argument("input")
    p.add_argument("--t", type=int, default=DEFAULT_T)
    p.add_argument("--budget", type=float, default=DEFAULT_BUDGET)
    p.add_argument("--out", default=None)

    p = add("yes-cc", _cmd_yes_cc, help="constructive clustering for a 2-colorable hypergraph")
    p.add_argument("input")
    p.add_argument("--coloring", default=None, help="coloring file; found exhaustively if omitted")
    p.add_argument("--out", default=None)
    p.add_argument("--graph-out", default=None)
    p.add_argument("--layout-out", default=None)

    p = add("decode-cc", _cmd_decode_cc, help="recover a 2-coloring from a clustering")
    p.add_argument("input", help="partition file")
    p.add_argument("--layout", required=True)
    p.add_argument("--out", default=None)

    p = add("verify-lemmas", _cmd_verify_lemmas, help="structural checks on a clustering")
    p.add_argument("input", help="partition file")
    p.add_argument("--graph", required=True)
    p.add_argument("--layout", required=True)
    p.add_argument("--out", default=None)

    p = add("gen-lin2", _cmd_gen_lin2, help="generate a regular Max-2Lin(q) instance")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n0", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=generators.LIN2_MODES, default="random")
    p.add_argument("--out", default=None)
    p.add_argument("--assignment-out", default=None)

    p = add("reduce-hc", _cmd_reduce_hc, help="Max-2Lin(q) -> weighted HC instance")
    p.add_argument("input")
    p.add_argument("--rho", type=float, default=DEFAULT_RHO)
    p.add_argument("--out", default=None)

    p = add("yes-tree", _cmd_yes_tree, help="completion-certificate tree for an assignment")
    p.add_argument("input", help="lin2 file")
    p.add_argument("--assignment", required=True)
    p.add_argument("--rho", type=float, default=DEFAULT_RHO)
    p.add_argument("--report-bound", action="store_true")
    p.add_argument("--out", default=None)

    p = add("eval-hc", _cmd_eval_hc, help="evaluate a tree against a weighted graph")
    p.add_argument("input", help="tree file")
    p.add_argument("--graph", required=True)

    p = add("solve-hc", _cmd_solve_hc, help="optimal tree by enumeration (n <= 10)")
    p.add_argument("input")
    p.add_argument("--out", default=None)

    p = add("gamma", _cmd_gamma, help="correlated quadrant probability")
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--b", type=float, default=None)
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p.add_argument("--grid", type=int, default=None, help="emit an NxN CSV grid instead")
    p.add_argument("--out", default=None)

    p = add("curves", _cmd_curves, help="bound-curve CSVs for the figure panels")
    p.add_argument("--panel", choices=("single", "split", "gw"), required=True)
    p.add_argument("--rho", type=float, default=DEFAULT_RHO)
    p.add_argument("--lo", type=float, default=None)
    p.add_argument("--hi", type=float, default=None)
    p.add_argument("--cap", type=float, default=0.88, help="beta1 + beta2 for the split panel")
    p.add_argument("--step", type=float, default=1e-3)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--out", default=None)

    add("ratio", _cmd_ratio, help="print the hardness gap constant")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gamma" and args.grid is None and (args.a is None or args.b is None):
        parser.error("gamma needs --a and --b (or --grid)")
    try:
        return args.handler(args)
    except (ParseError, ValidationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
