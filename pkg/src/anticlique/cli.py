"""Command-line front end: every solver operation plus a benchmark harness.

Machine-readable output with --json emits one JSON object per run, carrying
the result payload, a graph descriptor, the solver counters and the wall
time.  Exit codes: 0 success, 2 usage or input error, 3 size-guard refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .enumerator import SearchStats, run_standard
from .errors import ConfigurationError, GraphFormatError, GuardExceeded, SearchTimeout
from .graph import FORMATS, Graph, parse_graph, random_graph, serialize_graph
from .maximal import chromatic_with_stats, maximal_family
from .oracle import oracle_report
from .search import (
    all_max_anticliques,
    bipartite_options,
    core,
    max_anticlique,
    max_weight_anticlique,
    threshold_search,
)

_EXTENSION_FORMATS = {".col": "dimacs", ".dimacs": "dimacs", ".json": "json"}


@dataclass
class RunRecord:
    """One benchmark cell: what ran, on which graph, and what came out."""

    method: str
    v: int
    w: int
    d: float
    seed: int
    status: str                 # ok | timeout | refused
    alpha: int | None
    stats: SearchStats | None
    wall_ms: float

    def as_dict(self) -> dict:
        return {
            "method": self.method,
            "v": self.v,
            "w": self.w,
            "d": self.d,
            "seed": self.seed,
            "status": self.status,
            "alpha": self.alpha,
            "stats": self.stats.as_dict() if self.stats else None,
            "wall_ms": round(self.wall_ms, 3),
        }


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        # covers GraphFormatError, ConfigurationError, bad JSON specs, bad files
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anticlique",
        description="Exact anticlique (independent set) toolkit on five-valued rows.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def solver(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--graph", type=Path, help="graph file to load")
        p.add_argument("--format", choices=FORMATS,
                       help="graph file format (default: inferred from extension)")
        p.add_argument("--gen", metavar="V,D,SEED",
                       help="generate the input graph inline instead of --graph")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--trace", action="store_true",
                       help="print working/output stacks after each imposition")
        return p

    p = solver("count", "number of anticliques f(G)")
    p.set_defaults(handler=_cmd_count)

    p = solver("poly", "independence polynomial coefficients")
    p.set_defaults(handler=_cmd_poly)

    p = solver("enum", "list anticliques")
    p.add_argument("--min-size", type=int, default=0)
    p.set_defaults(handler=_cmd_enum)

    p = solver("alpha", "maximum anticlique via currentmax branch and bound")
    p.add_argument("--bipartite", action="store_true",
                   help="run on the smaller color class with the larger as bound")
    p.add_argument("--weights", type=Path,
                   help="per-vertex weights file, lines 'vertex weight' (missing = 1)")
    p.add_argument("--all", action="store_true", help="list all maximum anticliques")
    p.add_argument("--core", action="store_true",
                   help="intersection of all maximum anticliques")
    p.set_defaults(handler=_cmd_alpha)

    p = solver("threshold", "anticliques of size above a threshold")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--first", action="store_true", help="stop at the first hit")
    p.set_defaults(handler=_cmd_threshold)

    p = solver("maximal", "inclusion-maximal anticliques")
    p.set_defaults(handler=_cmd_maximal)

    p = solver("chromatic", "chromatic number via minimum anticlique cover")
    p.set_defaults(handler=_cmd_chromatic)

    p = solver("oracle", "brute-force report (small graphs only)")
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("gen", help="emit a seeded random graph")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--out", type=Path, help="write here instead of stdout")
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("bench", help="run a benchmark spec")
    p.add_argument("--spec", type=Path, required=True,
                   help="JSON spec: cells of v, d, seeds, method, timeout_s")
    p.add_argument("--csv", type=Path, help="also write records as CSV")
    p.add_argument("--json", action="store_true", help="JSON records to stdout")
    p.set_defaults(handler=_cmd_bench)

    return parser


# -- graph input -------------------------------------------------------------


def _load_graph(args) -> tuple[Graph, dict]:
    if args.gen and args.graph:
        raise ConfigurationError("give either --graph or --gen, not both")
    if args.gen:
        parts = args.gen.split(",")
        if len(parts) != 3:
            raise ConfigurationError("--gen expects V,D,SEED")
        try:
            v, d, seed = int(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise ConfigurationError("--gen expects V,D,SEED as int,float,int") from None
        g = random_graph(v, d, seed)
        return g, {"v": g.v, "w": g.w, "d": d, "seed": seed}
    if not args.graph:
        raise ConfigurationError("no input graph: use --graph FILE or --gen V,D,SEED")
    fmt = args.format or _EXTENSION_FORMATS.get(args.graph.suffix.lower(), "edgelist")
    g = parse_graph(args.graph.read_text(), fmt)
    return g, {"v": g.v, "w": g.w, "file": str(args.graph)}


def _trace_printer(args):
    if not args.trace:
        return None

    def hook(kind: str, info: dict) -> None:
        if kind == "impose":
            print(f"impose {info['t']}: {info['outcome']}")
            if "working" in info:
                print("  working stack (top first):")
                for line in info["working"]:
                    print(f"    {line}")
                if info.get("output"):
                    print("  output stack (top first):")
                    for line in reversed(info["output"]):
                        print(f"    {line}")
        elif kind == "finalize":
            if "count" in info:
                print(f"finalize {info['row']} N={info['count']}")
            else:
                print(f"finalize {info['row']} w_max={info['w_max']}")
        elif kind == "done":
            print("final output stack (top first):")
            for row, count in reversed(info["output"]):
                print(f"  {row} N={count}")
        elif kind == "prune":
            print(f"prune {info['row']} bound={info['bound']} limit={info['limit']}")
        elif kind == "improve":
            print(f"improve currentmax={info['currentmax']} via {info['row']}")

    return hook


def _fmt_set(X) -> str:
    return "{" + ",".join(str(y) for y in sorted(X)) + "}"


def _emit(args, descriptor: dict, payload: dict, stats: SearchStats | None,
          wall_ms: float, text_lines: list[str]) -> None:
    if args.json:
        record: dict[str, Any] = dict(payload)
        record["command"] = args.command
        record["graph"] = descriptor
        record["stats"] = stats.as_dict() if stats else None
        record["wall_ms"] = round(wall_ms, 3)
        print(json.dumps(record))
    else:
        for line in text_lines:
            print(line)
        if stats is not None:
            print(f"stats: {stats.as_dict()} wall_ms={wall_ms:.1f}", file=sys.stderr)


# -- solver commands ----------------------------------------------------------


def _cmd_count(args) -> int:
    g, desc = _load_graph(args)
    t0 = time.perf_counter()
    rows, stats = run_standard(g, trace=_trace_printer(args))
    f = sum(row.member_count() for row in rows)
    wall = (time.perf_counter() - t0) * 1000
    _emit(args, desc, {"f": f}, stats, wall, [str(f)])
    return 0


def _cmd_poly(args) -> int:
    g, desc = _load_graph(args)
    t0 = time.perf_counter()
    rows, stats = run_standard(g, trace=_trace_printer(args))
    poly = None
    for row in rows:
        poly = row.spectrum() if poly is None else poly + row.spectrum()
    wall = (time.perf_counter() - t0) * 1000
    coeffs = list(poly.coeffs)
    payload = {"coefficients": coeffs, "degree": poly.degree, "f": poly.evaluate(1)}
    _emit(args, desc, payload, stats, wall, [" ".join(map(str, coeffs))])
    return 0


def _cmd_enum(args) -> int:
    g, desc = _load_graph(args)
    t0 = time.perf_counter()
    rows, stats = run_standard(g, trace=_trace_printer(args))
    sets = sorted((X for row in rows for X in row.expand(args.min_size)), key=sorted)
    wall = (time.perf_counter() - t0) * 1000
    payload = {"anticliques": [sorted(X) for X in sets], "count": len(sets)}
    _emit(args, desc, payload, stats, wall, [_fmt_set(X) for X in sets])
    return 0


def _read_weights(path: Path) -> dict[int, int]:
    weights: dict[int, int] = {}
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ConfigurationError(f"weights line {lineno}: expected 'vertex weight'")
        try:
            weights[int(parts[0])] = int(parts[1])
        except ValueError:
            raise ConfigurationError(f"weights line {lineno}: non-integer entry") from None
    return weights


def _cmd_alpha(args) -> int:
    g, desc = _load_graph(args)
    trace = _trace_printer(args)
    t0 = time.perf_counter()
    if args.weights:
        weights = _read_weights(args.weights)
        res = max_weight_anticlique(g, weights, trace=trace)
    elif args.bipartite:
        res = max_anticlique(g, bipartite_options(g), trace=trace)
    else:
        res = max_anticlique(g, trace=trace)
    payload: dict[str, Any] = {"alpha": res.alpha, "witness": sorted(res.witness)}
    lines = [f"alpha = {res.alpha}", f"witness = {_fmt_set(res.witness)}"]
    if args.all:
        _alpha, sets = all_max_anticliques(g)
        payload["maximum_sets"] = [sorted(X) for X in sets]
        lines += [f"maximum sets ({len(sets)}):"] + [f"  {_fmt_set(X)}" for X in sets]
    if args.core:
        core_set = core(g)
        payload["core"] = sorted(core_set)
        lines.append(f"core = {_fmt_set(core_set)}")
    wall = (time.perf_counter() - t0) * 1000
    _emit(args, desc, payload, res.stats, wall, lines)
    return 0


def _cmd_threshold(args) -> int:
    g, desc = _load_graph(args)
    trace = _trace_printer(args)
    t0 = time.perf_counter()
    if args.first:
        found, stats = threshold_search(g, args.k, "first", trace=trace)
        wall = (time.perf_counter() - t0) * 1000
        payload = {"k": args.k, "found": sorted(found) if found is not None else None}
        lines = [f"found {_fmt_set(found)}" if found is not None else "none"]
        _emit(args, desc, payload, stats, wall, lines)
        return 0
    rows, stats = threshold_search(g, args.k, "all", trace=trace)
    sets = sorted((X for row in rows for X in row.expand(args.k + 1)), key=sorted)
    wall = (time.perf_counter() - t0) * 1000
    payload = {"k": args.k, "anticliques": [sorted(X) for X in sets], "count": len(sets)}
    _emit(args, desc, payload, stats, wall, [_fmt_set(X) for X in sets])
    return 0


def _cmd_maximal(args) -> int:
    g, desc = _load_graph(args)
    t0 = time.perf_counter()
    fam = maximal_family(g)
    wall = (time.perf_counter() - t0) * 1000
    payload = {
        "maximal": [sorted(X) for X in fam.sets],
        "count": len(fam.sets),
        "sieve": {
            "candidates": fam.candidates,
            "dominated": fam.dominated,
            "removed": fam.removed,
        },
    }
    lines = [_fmt_set(X) for X in fam.sets]
    lines.append(f"count = {len(fam.sets)}")
    lines.append(
        f"sieve: {fam.candidates} candidates, {fam.dominated} dominated, "
        f"{fam.removed} removed"
    )
    _emit(args, desc, payload, fam.stats, wall, lines)
    return 0


def _cmd_chromatic(args) -> int:
    g, desc = _load_graph(args)
    t0 = time.perf_counter()
    chi, cover, stats = chromatic_with_stats(g)
    wall = (time.perf_counter() - t0) * 1000
    payload = {"chi": chi, "cover": [sorted(X) for X in cover]}
    lines = [f"chi = {chi}"] + [f"  {_fmt_set(X)}" for X in cover]
    _emit(args, desc, payload, stats, wall, lines)
    return 0


def _cmd_oracle(args) -> int:
    g, desc = _load_graph(args)
    t0 = time.perf_counter()
    report = oracle_report(g)
    wall = (time.perf_counter() - t0) * 1000
    payload = {
        "f": report.f,
        "spectrum": list(report.spectrum.coeffs),
        "alpha": report.alpha,
        "maximum_sets": [sorted(X) for X in report.maximum_sets],
        "maximal_sets": [sorted(X) for X in report.maximal_sets],
        "chi": report.chi,
    }
    lines = [
        f"f = {report.f}",
        f"spectrum = {' '.join(map(str, report.spectrum.coeffs))}",
        f"alpha = {report.alpha}",
        f"maximum sets: {' '.join(_fmt_set(X) for X in report.maximum_sets)}",
        f"maximal sets: {' '.join(_fmt_set(X) for X in report.maximal_sets)}",
        f"chi = {report.chi}",
    ]
    _emit(args, desc, payload, None, wall, lines)
    return 0


def _cmd_gen(args) -> int:
    g = random_graph(args.v, args.d, args.seed)
    text = serialize_graph(g, args.format)
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return 0


# -- benchmark harness ---------------------------------------------------------


def _cmd_bench(args) -> int:
    spec = json.loads(args.spec.read_text())
    cells = spec["cells"] if isinstance(spec, dict) else spec
    if not isinstance(cells, list):
        raise ConfigurationError("bench spec must be a list of cells or {'cells': [...]}")
    records: list[RunRecord] = []
    for k, cell in enumerate(cells):
        try:
            v = int(cell["v"])
            d = float(cell["d"])
            method = cell["method"]
            seeds = cell.get("seeds") or [cell["seed"]]
            timeout_s = cell.get("timeout_s")
        except (KeyError, TypeError, ValueError):
            raise ConfigurationError(
                f"bench cell #{k} needs v, d, method and seed(s)"
            ) from None
        if method not in ("currentmax", "threshold", "oracle"):
            raise ConfigurationError(f"bench cell #{k}: unknown method {method!r}")
        for seed in seeds:
            records.append(_bench_cell(v, d, int(seed), method, timeout_s))
    if args.json:
        for rec in records:
            print(json.dumps(rec.as_dict()))
    else:
        print(_markdown_table(records))
    if args.csv:
        args.csv.write_text(_csv_table(records))
    return 0


def _bench_cell(v: int, d: float, seed: int, method: str,
                timeout_s: float | None) -> RunRecord:
    g = random_graph(v, d, seed)
    t0 = time.perf_counter()
    alpha: int | None = None
    stats: SearchStats | None = None
    status = "ok"
    try:
        if method == "currentmax":
            res = max_anticlique(g, timeout_s=timeout_s)
            alpha, stats = res.alpha, res.stats
        elif method == "threshold":
            alpha, stats = _threshold_alpha(g, timeout_s)
        else:
            report = oracle_report(g)
            alpha = report.alpha
    except SearchTimeout:
        status = "timeout"
    except GuardExceeded:
        status = "refused"
    wall = (time.perf_counter() - t0) * 1000
    return RunRecord(method, g.v, g.w, d, seed, status, alpha, stats, wall)


def _threshold_alpha(g: Graph, timeout_s: float | None) -> tuple[int, SearchStats]:
    """Iterated threshold probe: raise k to each hit's size until none is left.

    The final empty probe at k = alpha certifies maximality.
    """
    deadline = None if timeout_s is None else time.monotonic() + timeout_s
    total = SearchStats()
    k = 0
    while True:
        remaining = None if deadline is None else deadline - time.monotonic()
        if remaining is not None and remaining <= 0:
            raise SearchTimeout("threshold probe exceeded its time budget")
        found, stats = threshold_search(g, k, "first", timeout_s=remaining)
        total.rsp += stats.rsp
        total.trivial_changes += stats.trivial_changes
        total.deleted += stats.deleted
        total.finalized += stats.finalized
        total.peak_stack = max(total.peak_stack, stats.peak_stack)
        if found is None:
            return k, total
        k = len(found)


_BENCH_COLUMNS = ("method", "v", "w", "d", "seed", "status", "alpha",
                  "rsp", "trivial_changes", "peak_stack", "deleted", "wall_ms")


def _record_values(rec: RunRecord) -> list:
    stats = rec.stats.as_dict() if rec.stats else {}
    return [
        rec.method, rec.v, rec.w, rec.d, rec.seed, rec.status,
        "" if rec.alpha is None else rec.alpha,
        stats.get("rsp", ""), stats.get("trivial_changes", ""),
        stats.get("peak_stack", ""), stats.get("deleted", ""),
        f"{rec.wall_ms:.1f}",
    ]


def _markdown_table(records: list[RunRecord]) -> str:
    lines = ["| " + " | ".join(_BENCH_COLUMNS) + " |",
             "|" + "---|" * len(_BENCH_COLUMNS)]
    for rec in records:
        lines.append("| " + " | ".join(str(x) for x in _record_values(rec)) + " |")
    return "\n".join(lines)


def _csv_table(records: list[RunRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(_BENCH_COLUMNS)
    for rec in records:
        writer.writerow(_record_values(rec))
    return buf.getvalue()


if __name__ == "__main__":
    raise SystemExit(main())
