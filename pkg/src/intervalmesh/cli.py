"""Command line front end.

Subcommands: generate, verify, bounds, search, sweep, export, replay.
Coloring JSON is the interchange format between stages, so each one can
be exercised alone.  Exit codes follow a fixed contract: 0 for a valid
result, 1 for an invalid coloring or a proved absence, 2 for usage and
input problems, 3 for an exceeded search budget.  Every subcommand can
record a run manifest from which ``replay`` reproduces the primary
output byte for byte.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .bounds import bounds_table, bounds_table_csv
from .colorings import (
    coloring_from_json_dict,
    coloring_to_json_dict,
    verify_interval,
)
from .constructions import (
    cylinder_coloring,
    spectrum_sweep,
    step_down,
    torus_coloring,
)
from .errors import (
    BudgetExceededError,
    DisconnectedGraphError,
    InvalidColoringError,
    InvalidParameterError,
    NonBipartiteError,
    NotIntervalColorableError,
    SchemaError,
)
from .export import to_csv, to_dot
from .grids import Family, build_cylinder, build_torus, dumps_canonical
from .search import (
    DEFAULT_MAX_EDGES,
    Outcome,
    SearchBudget,
    exact_W,
    exact_w,
    find_interval_coloring,
)

EXIT_VALID = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

ENV_MAX_EDGES = "INTERVALMESH_MAX_EDGES"


class _UsageError(Exception):
    pass


def _emit(text: str, path: str | None) -> list[str]:
    """Write to the output path, or stdout when the path is absent or '-'."""
    if path is None or path == "-":
        sys.stdout.write(text)
        return []
    Path(path).write_text(text, encoding="utf-8")
    return [path]


def _load_json(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _write_manifest(
    path: str | None,
    subcommand: str,
    argv: list[str],
    parameters: dict,
    inputs: list[str],
    outputs: list[str],
    wall_time_s: float,
    result: str,
) -> None:
    if path is None:
        return
    manifest = {
        "tool": "intervalmesh",
        "version": __version__,
        "subcommand": subcommand,
        "argv": argv,
        "parameters": parameters,
        "inputs": inputs,
        "outputs": outputs,
        "wall_time_s": round(wall_time_s, 6),
        "result": result,
    }
    Path(path).write_text(dumps_canonical(manifest), encoding="utf-8")


def _strip_manifest_flag(argv: list[str]) -> list[str]:
    out = []
    skip = False
    for token in argv:
        if skip:
            skip = False
            continue
        if token == "--manifest":
            skip = True
            continue
        if token.startswith("--manifest="):
            continue
        out.append(token)
    return out


def _parse_range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    if len(parts) != 2:
        raise _UsageError(f"range must look like A..B, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise _UsageError(f"range bounds must be integers, got {text!r}") from None
    if lo > hi:
        raise _UsageError(f"empty range {text!r}")
    return lo, hi


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_generate(args: argparse.Namespace) -> tuple[int, str, list[str], list[str]]:
    family = Family(args.family)
    if family is Family.CYLINDER:
        result = cylinder_coloring(args.m, args.n)
        claimed = result.claimed_t
        if args.t is not None and args.t != claimed:
            raise _UsageError(
                f"cylinder ({args.m},{args.n}) is constructible only at t={claimed}"
            )
        doc = coloring_to_json_dict(result.coloring, result.rule_trace)
        t = claimed
    else:
        result = torus_coloring(args.m, args.n)
        claimed = result.claimed_t
        t = claimed if args.t is None else args.t
        if t == claimed:
            doc = coloring_to_json_dict(result.coloring, result.rule_trace)
        else:
            if not 4 <= t < claimed:
                raise _UsageError(
                    f"torus ({args.m},{args.n}) supports t in 4..{claimed}, got {t}"
                )
            coloring = result.coloring
            while coloring.palette_size > t:
                coloring = step_down(coloring)
            doc = coloring_to_json_dict(coloring)
    outputs = _emit(dumps_canonical(doc), args.output)
    summary = f"{family.value} m={args.m} n={args.n} t={t}"
    return EXIT_VALID, summary, [], outputs


def _cmd_verify(args: argparse.Namespace) -> tuple[int, str, list[str], list[str]]:
    doc = _load_json(args.path)
    coloring, _ = coloring_from_json_dict(doc)
    report = verify_interval(coloring)
    if args.json:
        text = dumps_canonical(report.to_json_dict())
    else:
        text = report.format_table() + "\n"
    outputs = _emit(text, args.output)
    code = EXIT_VALID if report.interval else EXIT_INVALID
    return code, f"interval={report.interval}", [args.path], outputs


def _cmd_bounds(args: argparse.Namespace) -> tuple[int, str, list[str], list[str]]:
    families = (
        [Family.CYLINDER, Family.TORUS]
        if args.family == "both"
        else [Family(args.family)]
    )
    m_range = _parse_range(args.m_range)
    n_range = _parse_range(args.n_range)
    rows = bounds_table(families, m_range, n_range, args.oracle_budget)
    outputs = _emit(bounds_table_csv(rows), args.output)
    return EXIT_VALID, f"{len(rows)} rows", [], outputs


def _search_budget(args: argparse.Namespace) -> SearchBudget:
    max_edges = args.max_edges
    if max_edges is None:
        env = os.environ.get(ENV_MAX_EDGES)
        if env is not None:
            try:
                max_edges = int(env)
            except ValueError:
                raise _UsageError(
                    f"{ENV_MAX_EDGES} must be an integer, got {env!r}"
                ) from None
        else:
            max_edges = DEFAULT_MAX_EDGES
    return SearchBudget(
        max_edges=max_edges, max_nodes=args.max_nodes, time_cap_s=args.timeout
    )


def _cmd_search(args: argparse.Namespace) -> tuple[int, str, list[str], list[str]]:
    family = Family(args.family)
    g = build_cylinder(args.m, args.n) if family is Family.CYLINDER else build_torus(
        args.m, args.n
    )
    budget = _search_budget(args)
    if args.t is not None:
        result = find_interval_coloring(g, args.t, budget)
        if result.outcome is Outcome.FOUND:
            doc = coloring_to_json_dict(result.coloring)
            outputs = _emit(dumps_canonical(doc), args.output)
            return EXIT_VALID, f"found t={args.t}", [], outputs
        if result.outcome is Outcome.ABSENT:
            print(
                f"no interval {args.t}-coloring exists "
                f"({result.nodes} nodes searched)",
                file=sys.stderr,
            )
            return EXIT_INVALID, f"absent t={args.t}", [], []
        print(f"search budget exceeded: {result.detail}", file=sys.stderr)
        return EXIT_BUDGET, f"budget-exceeded t={args.t}", [], []
    name = "w" if args.exact_w else "W"
    value = exact_w(g, budget) if args.exact_w else exact_W(g, budget)
    outputs = _emit(f"{value}\n", args.output)
    return EXIT_VALID, f"exact_{name}={value}", [], outputs


def _cmd_sweep(args: argparse.Namespace) -> tuple[int, str, list[str], list[str]]:
    colorings = spectrum_sweep(args.m, args.n)
    docs = [coloring_to_json_dict(c) for c in colorings]
    outputs = _emit(dumps_canonical({"colorings": docs}), args.output)
    summary = f"{len(docs)} colorings t={colorings[0].palette_size}..4"
    return EXIT_VALID, summary, [], outputs


def _cmd_export(args: argparse.Namespace) -> tuple[int, str, list[str], list[str]]:
    doc = _load_json(args.path)
    coloring, trace = coloring_from_json_dict(doc)
    report = verify_interval(coloring)
    if not report.interval:
        bad = report.violating_vertices
        where = f" (first violated vertex x_{bad[0].ring}_{bad[0].layer})" if bad else ""
        print(f"refusing to export a non-interval coloring{where}", file=sys.stderr)
        return EXIT_INVALID, "not interval", [args.path], []
    text = to_dot(coloring) if args.format == "dot" else to_csv(coloring, trace)
    outputs = _emit(text, args.output)
    return EXIT_VALID, f"{args.format} export", [args.path], outputs


def _cmd_replay(args: argparse.Namespace) -> tuple[int, str, list[str], list[str]]:
    doc = _load_json(args.manifest_path)
    if not isinstance(doc, dict) or "argv" not in doc:
        raise SchemaError("manifest must be an object with an 'argv' array")
    argv = doc["argv"]
    if not isinstance(argv, list) or not all(isinstance(s, str) for s in argv):
        raise SchemaError("'argv' must be an array of strings")
    if args.output is not None:
        argv = _replace_output(argv, args.output)
    code = run(argv)
    return code, f"replayed {doc.get('subcommand', '?')}", [args.manifest_path], []


def _replace_output(argv: list[str], path: str) -> list[str]:
    out = []
    skip = False
    for token in argv:
        if skip:
            skip = False
            continue
        if token in ("-o", "--output"):
            skip = True
            continue
        if token.startswith("--output="):
            continue
        out.append(token)
    return out + ["-o", path]


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_manifest_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--manifest", metavar="FILE", help="write a replayable run manifest")


def _add_output_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "-o", "--output", metavar="FILE", help="write to FILE instead of stdout"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intervalmesh",
        description="interval edge colorings of cylinder and torus grids",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("generate", help="emit a constructed coloring as JSON")
    p.add_argument("--family", choices=["cylinder", "torus"], required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--t", type=int, help="palette size (torus: any value down to 4)")
    _add_output_flag(p)
    _add_manifest_flag(p)
    p.set_defaults(handler=_cmd_generate)

    p = sub.add_parser("verify", help="check a coloring JSON file")
    p.add_argument("path", help="coloring JSON path, or - for stdin")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    _add_output_flag(p)
    _add_manifest_flag(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("bounds", help="emit the bounds table as CSV")
    p.add_argument("--family", choices=["cylinder", "torus", "both"], default="both")
    p.add_argument("--m-range", "-m-range", dest="m_range", required=True, metavar="A..B")
    p.add_argument("--n-range", "-n-range", dest="n_range", required=True, metavar="A..B")
    p.add_argument(
        "--oracle-budget",
        type=int,
        metavar="EDGES",
        help="fill exact columns for instances with at most EDGES edges",
    )
    _add_output_flag(p)
    _add_manifest_flag(p)
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("search", help="exhaustive search for interval colorings")
    p.add_argument("--family", choices=["cylinder", "torus"], required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--t", type=int, help="decide this palette size")
    group.add_argument("--exact-w", action="store_true", help="least feasible palette")
    group.add_argument(
        "--exact-W", dest="exact_W", action="store_true", help="greatest feasible palette"
    )
    p.add_argument(
        "--max-edges",
        type=int,
        help=f"instance size cap (default {DEFAULT_MAX_EDGES}, or ${ENV_MAX_EDGES})",
    )
    p.add_argument("--max-nodes", type=int, help="backtracking node cap")
    p.add_argument("--timeout", type=float, metavar="S", help="wall time cap in seconds")
    _add_output_flag(p)
    _add_manifest_flag(p)
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser("sweep", help="torus colorings for every t down to 4")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    _add_output_flag(p)
    _add_manifest_flag(p)
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("export", help="render a coloring as DOT or CSV")
    p.add_argument("path", help="coloring JSON path, or - for stdin")
    p.add_argument("--format", choices=["dot", "csv"], required=True)
    _add_output_flag(p)
    _add_manifest_flag(p)
    p.set_defaults(handler=_cmd_export)

    p = sub.add_parser("replay", help="re-run a recorded manifest")
    p.add_argument("manifest_path", help="manifest JSON path")
    _add_output_flag(p)
    p.set_defaults(handler=_cmd_replay)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; pass both through
        if exc.code is None:
            return EXIT_VALID
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    started = time.perf_counter()
    try:
        code, result, inputs, outputs = args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except json.JSONDecodeError as exc:
        print(
            f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidParameterError, DisconnectedGraphError, NonBipartiteError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidColoringError as exc:
        print(f"invalid coloring: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NotIntervalColorableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetExceededError as exc:
        print(f"search budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    wall = time.perf_counter() - started
    manifest_path = getattr(args, "manifest", None)
    parameters = {
        k: v
        for k, v in vars(args).items()
        if k not in ("handler", "manifest", "subcommand") and v is not None
    }
    _write_manifest(
        manifest_path,
        args.subcommand,
        _strip_manifest_flag(argv),
        parameters,
        inputs,
        outputs,
        wall,
        result,
    )
    return code


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
