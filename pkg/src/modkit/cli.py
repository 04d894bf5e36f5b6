"""Command-line front end.

Four subcommands: ``solve`` (full relaxation + adaptive rounding), ``cut``
(bipartition relaxation + single-hyperplane rounding), ``exact``
(brute-force oracle), and ``bounds`` (guarantee-curve CSV samples).
Reports are deterministic: identical configuration (seed included) yields
byte-identical output files. Floats are serialized with 17 significant
digits so that determinism is byte-testable.

Exit codes: 0 success, 2 validation/usage error, 3 solver non-convergence.
"""

from __future__ import annotations

import argparse
import secrets
import sys

import numpy as np

from . import bounds
from .exact import CUT_LIMIT, FULL_LIMIT, exact_cut, exact_full
from .graph import GraphFormatError, parse_edge_list
from .modularity import build_q
from .rounding import round_cut, round_full
from .sdp import SolverOptions, solve_cut_sdp, solve_full_sdp

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NO_CONVERGENCE = 3


def _fmt(value) -> str:
    """Serialize to JSON text with floats at 17 significant digits."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    if isinstance(value, str):
        return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(value, dict):
        inner = ", ".join(f"{_fmt(str(k))}: {_fmt(v)}" for k, v in value.items())
        return "{" + inner + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps_report(report: dict) -> str:
    lines = ["{"]
    body = []
    for key, value in report.items():
        body.append(f"  {_fmt(str(key))}: {_fmt(value)}")
    lines.append(",\n".join(body))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _write_output(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_graph(args):
    try:
        with open(args.input) as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {args.input}: {exc}") from exc
    return parse_edge_list(text, args.variant)


def _solver_options(args) -> SolverOptions:
    return SolverOptions(
        tol_feas=args.tol_feas,
        tol_obj=args.tol_obj,
        max_iters=args.max_iters,
        penalty=args.penalty,
        iterate_log=args.iterate_log,
    )


def _resolve_seed(args) -> int:
    if args.entropy:
        return secrets.randbits(64)
    if not 0 <= args.seed < 2**64:
        raise ValueError(f"seed must be an unsigned 64-bit value, got {args.seed}")
    return args.seed


def _config_echo(args, command: str, seed: int) -> dict:
    return {
        "command": command,
        "input": args.input,
        "variant": args.variant,
        "trials": args.trials,
        "seed": seed,
        "tol_feas": args.tol_feas,
        "tol_obj": args.tol_obj,
        "max_iters": args.max_iters,
        "penalty": args.penalty,
        "format": args.format,
    }


def _run_rounding_command(args, command: str) -> int:
    if args.format != "json":
        raise GraphFormatError(f"the {command} command emits json, not {args.format}")
    graph = _load_graph(args)
    qm = build_q(graph)
    opts = _solver_options(args)
    seed = _resolve_seed(args)
    if command == "solve":
        sol = solve_full_sdp(qm, opts)
        best, report = round_full(qm, sol, trials=args.trials, seed=seed)
    else:
        sol = solve_cut_sdp(qm, opts)
        best, report = round_cut(qm, sol, trials=args.trials, seed=seed)

    payload = {
        "config": _config_echo(args, command, seed),
        "graph": {"n": graph.n, "m": graph.m, "variant": graph.variant,
                  "scale": qm.scale},
        "solver": {
            "kind": sol.kind,
            "iterations": sol.iterations,
            "primal_residual": sol.primal_residual,
            "dual_residual": sol.dual_residual,
            "converged": sol.converged,
        },
        "report": report.to_dict(),
        "partition": {
            "k": best.partition.k,
            "assign": list(best.partition.assign),
        },
    }
    _write_output(dumps_report(payload), args.output)
    return EXIT_OK if sol.converged else EXIT_NO_CONVERGENCE


def _run_exact(args) -> int:
    if args.format != "json":
        raise GraphFormatError(f"the exact command emits json, not {args.format}")
    graph = _load_graph(args)
    qm = build_q(graph)
    if args.problem == "full":
        result = exact_full(qm, limit=args.limit if args.limit else FULL_LIMIT)
    else:
        result = exact_cut(qm, limit=args.limit if args.limit else CUT_LIMIT)
    payload = {
        "config": {
            "command": "exact",
            "input": args.input,
            "variant": args.variant,
            "problem": args.problem,
            "format": args.format,
        },
        "opt": result.opt_value,
        "partition": list(result.opt_partition.assign),
        "enumerated": result.enumerated,
    }
    _write_output(dumps_report(payload), args.output)
    return EXIT_OK


def _figure_rows(figure: int, samples: int, k_max: int):
    if figure == 1:
        header = ["x"] + [f"g{k}" for k in range(1, 6)]
        xs = np.linspace(0.0, 1.0, samples)
        cols = [xs] + [bounds.g_k(xs, k) for k in range(1, 6)]
        meta = ["# figure: 1", f"# samples: {samples}"]
    elif figure == 2:
        header = ["opt", "floor"]
        xs = np.linspace(0.0, 1.0, samples, endpoint=False)
        cols = [xs, bounds.full_lower_bound_curve(xs, k_max=k_max)]
        meta = ["# figure: 2", f"# samples: {samples}", f"# k_max: {k_max}"]
    elif figure == 3:
        header = ["x", "g"]
        xs = np.linspace(0.5, 1.0, samples)
        cols = [xs, bounds.cut_error_function(xs)]
        meta = ["# figure: 3", f"# samples: {samples}"]
    elif figure == 4:
        header = ["opt_cut", "floor"]
        xs = np.linspace(0.0, 0.5, samples)
        cols = [xs, bounds.cut_error_curve(xs)]
        meta = ["# figure: 4", f"# samples: {samples}"]
    else:
        raise GraphFormatError(f"unknown figure {figure}; choose 1-4")
    return meta, header, np.column_stack(cols)


def _run_bounds(args) -> int:
    if args.format != "csv":
        raise GraphFormatError(f"the bounds command emits csv, not {args.format}")
    if args.samples < 1:
        raise GraphFormatError("samples must be at least 1")
    meta, header, table = _figure_rows(args.figure, args.samples, args.k_max)
    lines = meta + [",".join(header)]
    for row in table:
        lines.append(",".join(format(v, ".17g") for v in row))
    _write_output("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modkit",
        description="Modularity maximization with certified additive guarantees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_args(p, with_rounding: bool):
        p.add_argument("--input", required=True, help="edge-list file")
        p.add_argument(
            "--variant",
            default="undirected",
            choices=["undirected", "weighted", "directed", "bipartite"],
        )
        p.add_argument("--output", default=None, help="report path (default stdout)")
        if with_rounding:
            p.add_argument("--trials", type=int, default=200)
            p.add_argument("--seed", type=int, default=0)
            p.add_argument(
                "--entropy",
                action="store_true",
                help="draw the seed from OS randomness instead of --seed",
            )
            p.add_argument("--tol-feas", dest="tol_feas", type=float, default=1e-7)
            p.add_argument("--tol-obj", dest="tol_obj", type=float, default=1e-6)
            p.add_argument("--max-iters", dest="max_iters", type=int, default=50000)
            p.add_argument("--penalty", type=float, default=1.0)
            p.add_argument(
                "--iterate-log",
                dest="iterate_log",
                default=None,
                help="CSV file receiving per-iteration solver diagnostics",
            )
            p.add_argument("--format", default="json", choices=["json", "csv"])
        else:
            p.add_argument("--format", default="json", choices=["json", "csv"])

    p_solve = sub.add_parser("solve", help="full relaxation + adaptive rounding")
    add_graph_args(p_solve, with_rounding=True)

    p_cut = sub.add_parser("cut", help="bipartition relaxation + one hyperplane")
    add_graph_args(p_cut, with_rounding=True)

    p_exact = sub.add_parser("exact", help="brute-force oracle")
    add_graph_args(p_exact, with_rounding=False)
    p_exact.add_argument("--problem", default="full", choices=["full", "cut"])
    p_exact.add_argument(
        "--limit", type=int, default=None, help="enumeration size guard override"
    )

    p_bounds = sub.add_parser("bounds", help="guarantee-curve CSV samples")
    p_bounds.add_argument("--figure", type=int, required=True, choices=[1, 2, 3, 4])
    p_bounds.add_argument("--samples", type=int, default=1000)
    p_bounds.add_argument("--k-max", dest="k_max", type=int, default=bounds.K_CAP)
    p_bounds.add_argument("--output", default=None)
    p_bounds.add_argument("--format", default="csv", choices=["json", "csv"])

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "solve":
            return _run_rounding_command(args, "solve")
        if args.command == "cut":
            return _run_rounding_command(args, "cut")
        if args.command == "exact":
            return _run_exact(args)
        if args.command == "bounds":
            return _run_bounds(args)
        parser.error(f"unknown command {args.command}")
    except (GraphFormatError, ValueError) as exc:
        print(f"modkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
