"""Command-line front end.

Exit codes: 0 on success (an empty answer is still a success), 1 when a file
cannot be read or written, 2 for bad arguments or malformed input files.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time

from .bounds import BOUND_NAMES, BoundContext, evaluate_bounds, parse_bound_names
from .color import greedy_color, read_coloring
from .graph import (GraphFormatError, gnm_random_graph, gnp_random_graph, load_graph_with_report,
                    write_attributes, write_edge_list)
from .heuristic import heur_rfc
from .oracle import DEFAULT_SIZE_LIMIT, OracleSizeError, oracle_max_fair_clique
from .reduce import reduce_pipeline
from .result import ORACLE, verify_fair_clique
from .search import DEFAULT_BOUNDS, SearchConfig, max_rfc

logger = logging.getLogger("fairclique")

EXIT_OK, EXIT_IO, EXIT_USAGE = 0, 1, 2
BENCH_COLUMNS = ("k", "delta", "size", "nodes", "reduce_ms", "search_ms", "total_ms")


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """"3", "2..5" (inclusive) or "1,3,4"."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
            if hi_i < lo_i:
                raise ValueError
            return list(range(lo_i, hi_i + 1))
        return sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None


def _non_negative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive(text: str) -> int:
    v = _non_negative(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--edges", required=True, help="edge list file")
    p.add_argument("--attrs", help="attribute file (id attr per line)")
    p.add_argument("--seed", type=int, help="draw random attributes when --attrs is absent")


def _add_kd(p: argparse.ArgumentParser, delta: bool = True) -> None:
    p.add_argument("--k", type=_positive, required=True)
    if delta:
        p.add_argument("--delta", type=_non_negative, required=True)


def _add_search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--bounds", default=DEFAULT_BOUNDS,
                   help="comma list of bounds ('ad' = basic group, 'none' = off)")
    p.add_argument("--no-heuristic", action="store_true")
    p.add_argument("--no-reduce", action="store_true")
    p.add_argument("--parallel", action="store_true", help="search components in worker processes")
    p.add_argument("--node-limit", type=_non_negative, default=0)


def _add_format(p: argparse.ArgumentParser, default: str = "json") -> None:
    p.add_argument("--format", choices=("json", "text", "csv"), default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fairclique",
                                     description="Maximum relative fair clique tools")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="exact maximum fair clique")
    _add_input(p)
    _add_kd(p)
    _add_search_flags(p)
    _add_format(p)

    p = sub.add_parser("reduce", help="run the reduction pipeline only")
    _add_input(p)
    _add_kd(p, delta=False)
    p.add_argument("--write-edges", help="write the residual edge list (dense ids)")
    p.add_argument("--write-attrs", help="write the residual attributes (dense ids)")
    _add_format(p)

    p = sub.add_parser("bounds", help="evaluate upper bounds on the whole graph")
    _add_input(p)
    _add_kd(p)
    p.add_argument("--bounds", default=",".join(BOUND_NAMES))
    p.add_argument("--colors", help="coloring file (id color per line) instead of greedy")
    _add_format(p)

    p = sub.add_parser("heuristic", help="greedy fair clique and color bound")
    _add_input(p)
    _add_kd(p)
    _add_format(p)

    p = sub.add_parser("oracle", help="exhaustive answer for small graphs")
    _add_input(p)
    _add_kd(p)
    p.add_argument("--size-limit", type=_non_negative, default=DEFAULT_SIZE_LIMIT)
    _add_format(p)

    p = sub.add_parser("gen", help="write a seeded random graph and attributes")
    p.add_argument("--n", type=_non_negative, required=True)
    density = p.add_mutually_exclusive_group(required=True)
    density.add_argument("--p", type=float)
    density.add_argument("--m", type=_non_negative)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--edges", required=True, help="output edge list")
    p.add_argument("--attrs", required=True, help="output attribute file")
    _add_format(p)

    p = sub.add_parser("bench", help="sweep k and delta, one CSV row per setting")
    _add_input(p)
    p.add_argument("--k", type=parse_range, required=True, help="e.g. 2..4")
    p.add_argument("--delta", type=parse_range, required=True, help="e.g. 0,1,2")
    _add_search_flags(p)
    _add_format(p, default="csv")
    return parser


# -- output --------------------------------------------------------------


def _emit(out, payload: dict, fmt: str, csv_fields: list[str] | None = None) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    elif fmt == "csv":
        fields = csv_fields or [k for k in sorted(payload) if not isinstance(payload[k], dict)]
        w = csv.writer(out, lineterminator="\n")
        w.writerow(fields)
        w.writerow([_csv_cell(payload.get(f)) for f in fields])
    else:
        for key in sorted(payload):
            out.write(f"{key}: {_text_cell(payload[key])}\n")


def _csv_cell(v):
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    if isinstance(v, float):
        return f"{v:.3f}"
    return v


def _text_cell(v):
    if isinstance(v, dict):
        return ", ".join(f"{k}={_text_cell(x)}" for k, x in sorted(v.items()) if not isinstance(x, list))
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    if isinstance(v, float):
        return f"{v:.3f}"
    return str(v)


def _round_ms(d: dict) -> dict:
    return {k: round(v, 3) for k, v in d.items()}


# -- commands ------------------------------------------------------------


def _load(args):
    if args.attrs is None and args.seed is None:
        raise UsageError("either --attrs or --seed is required")
    g, report = load_graph_with_report(args.edges, args.attrs, args.seed)
    if report.self_loops_dropped or report.duplicates_dropped:
        logger.info("dropped %d self-loops, %d duplicate edges",
                    report.self_loops_dropped, report.duplicates_dropped)
    return g


def _config(args) -> SearchConfig:
    try:
        names = parse_bound_names(args.bounds)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return SearchConfig(bounds=names, use_heuristic=not args.no_heuristic,
                        reduce=not args.no_reduce, parallel=args.parallel,
                        node_limit=args.node_limit)


def _search_payload(g, args, config: SearchConfig, res) -> dict:
    red = res.reduction.to_dict()
    for stage in red["stages"]:
        stage["elapsed_ms"] = round(stage["elapsed_ms"], 3)
    red["elapsed_ms"] = round(red["elapsed_ms"], 3)
    phases = _round_ms(res.phases_ms)
    phases["total"] = round(res.elapsed_ms, 3)
    return {
        "k": args.k, "delta": args.delta, "size": res.size,
        "vertices": list(res.vertices.members),
        "count_a": res.count_a, "count_b": res.count_b,
        "reduction": red, "phases_ms": phases, "nodes": res.nodes,
        "provenance": res.provenance, "optimal": res.optimal,
        "bounds": list(config.bounds),
        "valid": res.empty or verify_fair_clique(g, res.vertices, args.k, args.delta),
    }


def cmd_search(args, out) -> int:
    g = _load(args)
    config = _config(args)
    res = max_rfc(g, args.k, args.delta, config)
    fields = ["k", "delta", "size", "count_a", "count_b", "nodes", "provenance", "vertices"]
    _emit(out, _search_payload(g, args, config, res), args.format, fields)
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    g = _load(args)
    residual, report = reduce_pipeline(g, args.k)
    if args.write_edges:
        write_edge_list(residual, args.write_edges)
    if args.write_attrs:
        write_attributes(residual, args.write_attrs)
    red = report.to_dict()
    for stage in red["stages"]:
        stage["elapsed_ms"] = round(stage["elapsed_ms"], 3)
    red["elapsed_ms"] = round(red["elapsed_ms"], 3)
    payload = {"k": args.k, "reduction": red, "labels": list(residual.labels),
               "vertices_after": residual.num_vertices, "edges_after": residual.num_edges}
    _emit(out, payload, args.format, ["k", "vertices_after", "edges_after"])
    return EXIT_OK


def cmd_bounds(args, out) -> int:
    g = _load(args)
    try:
        names = parse_bound_names(args.bounds)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    coloring = read_coloring(args.colors, g) if args.colors else greedy_color(g)
    ctx = BoundContext.build(g, args.k, args.delta, coloring)
    values = evaluate_bounds(ctx, names)
    if set(parse_bound_names("ad")) <= set(names):
        values["ub_ad"] = min(values[key] for key in ("ub_s", "ub_a", "ub_c", "ub_ac", "ub_eac"))
    payload = {"k": args.k, "delta": args.delta, "num_colors": coloring.num_colors, **values}
    _emit(out, payload, args.format)
    return EXIT_OK


def cmd_heuristic(args, out) -> int:
    g = _load(args)
    t0 = time.perf_counter()
    outcome = heur_rfc(g, args.k, args.delta)
    res = outcome.clique
    payload = {
        "k": args.k, "delta": args.delta, "size": res.size,
        "vertices": list(res.vertices.members), "count_a": res.count_a, "count_b": res.count_b,
        "ub": outcome.ub, "residual_vertices": outcome.residual.num_vertices,
        "residual_edges": outcome.residual.num_edges, "provenance": res.provenance,
        "elapsed_ms": round((time.perf_counter() - t0) * 1e3, 3),
    }
    _emit(out, payload, args.format,
          ["k", "delta", "size", "count_a", "count_b", "ub", "provenance", "vertices"])
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    g = _load(args)
    t0 = time.perf_counter()
    try:
        res = oracle_max_fair_clique(g, args.k, args.delta, size_limit=args.size_limit or None)
    except OracleSizeError as exc:
        raise UsageError(str(exc)) from None
    payload = {
        "k": args.k, "delta": args.delta, "size": res.size,
        "vertices": list(res.witness.members), "count_a": res.witness.count_a,
        "count_b": res.witness.count_b, "maximal_cliques": res.maximal_cliques,
        "provenance": ORACLE, "elapsed_ms": round((time.perf_counter() - t0) * 1e3, 3),
    }
    _emit(out, payload, args.format,
          ["k", "delta", "size", "count_a", "count_b", "maximal_cliques", "vertices"])
    return EXIT_OK


def cmd_gen(args, out) -> int:
    if args.p is not None:
        if not 0.0 <= args.p <= 1.0:
            raise UsageError("--p must lie in [0, 1]")
        g = gnp_random_graph(args.n, args.p, args.seed)
    else:
        try:
            g = gnm_random_graph(args.n, args.m, args.seed)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    write_edge_list(g, args.edges)
    write_attributes(g, args.attrs)
    payload = {"n": g.num_vertices, "m": g.num_edges, "count_a": g.count_a,
               "count_b": g.count_b, "seed": args.seed}
    _emit(out, payload, args.format, ["n", "m", "count_a", "count_b", "seed"])
    return EXIT_OK


def cmd_bench(args, out) -> int:
    g = _load(args)
    config = _config(args)
    if not args.k or min(args.k) < 1 or not args.delta or min(args.delta) < 0:
        raise UsageError("k values must be >= 1 and delta values >= 0")
    rows = []
    for k in args.k:
        for delta in args.delta:
            res = max_rfc(g, k, delta, config)
            ph = res.phases_ms
            rows.append({"k": k, "delta": delta, "size": res.size, "nodes": res.nodes,
                         "reduce_ms": round(ph["reduce"], 3),
                         "search_ms": round(ph["heuristic"] + ph["search"], 3),
                         "total_ms": round(res.elapsed_ms, 3)})
    if args.format == "json":
        out.write(json.dumps(rows, sort_keys=True, indent=2) + "\n")
    elif args.format == "csv":
        w = csv.DictWriter(out, fieldnames=BENCH_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    else:
        for row in rows:
            out.write(" ".join(f"{c}={row[c]}" for c in BENCH_COLUMNS) + "\n")
    return EXIT_OK


COMMANDS = {"search": cmd_search, "reduce": cmd_reduce, "bounds": cmd_bounds,
            "heuristic": cmd_heuristic, "oracle": cmd_oracle, "gen": cmd_gen, "bench": cmd_bench}


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, GraphFormatError) as exc:
        print(f"fairclique: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"fairclique: error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"fairclique: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run_to_string(argv) -> tuple[int, str]:
    buf = io.StringIO()
    code = run(argv, buf)
    return code, buf.getvalue()


def main(argv=None) -> int:
    return run(argv)
