"""Command-line front end.

JSON results go to stdout, diagnostics to stderr; exit codes are 0
(ok), 1 (domain error), 2 (usage error).  Graph input is a graph6
line/file or an edge-list file, sniffed by content unless --format
says otherwise.
"""

from __future__ import annotations

import argparse
import json
import math
import multiprocessing
import sys

from . import generators
from .blocks import decompose, format_block_forest
from .coloring import (
    coloring_guarantee,
    greedy_acyclic_coloring,
    indeque_via_coloring,
    parse_coloring,
)
from .exact import CapExceededError, brute_force, enumerate_maximum_sets, solve
from .forest import CyclicInputError, indeque_forest
from .graph import Graph, OracleLimitError
from .graph6 import (
    EdgeListError,
    Graph6Error,
    parse_edge_list,
    parse_graph6,
    serialize_edge_list,
    serialize_graph6,
)
from .pathwidth2 import StructureMismatch, indeque_pw2_detailed
from .verify import ClusterCertificate, certificate_partition, verify_indeque


class CliError(Exception):
    """Domain error reported on stderr with exit code 1."""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(str(exc)) from exc


def _looks_like_edge_list(text: str) -> bool:
    for ln in text.splitlines():
        s = ln.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        return len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)
    return False


def _load_single_graph(path: str, fmt: str | None) -> Graph:
    text = _read_text(path)
    if fmt == "edgelist" or (fmt is None and _looks_like_edge_list(text)):
        try:
            return parse_edge_list(text)
        except (EdgeListError, ValueError) as exc:
            raise CliError(f"edge list: {exc}") from exc
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CliError("no graph")
    try:
        return parse_graph6(lines[0])
    except Graph6Error as exc:
        raise CliError(f"graph6 line 1: {exc}") from exc


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout)
    sys.stdout.write("\n")


def _cmd_solve(args) -> int:
    g = _load_single_graph(args.input, args.format)
    try:
        if args.method == "brute":
            result = brute_force(g, limit=args.limit)
        else:
            result = solve(g)
    except OracleLimitError as exc:
        raise CliError(str(exc)) from exc
    payload = result.to_json()
    if args.enumerate_max:
        try:
            certs = enumerate_maximum_sets(g, cap=args.cap, limit=args.limit)
            exceeded = False
        except CapExceededError as exc:
            certs = exc.found
            exceeded = True
        parts = sorted({certificate_partition(c) for c in certs}, reverse=True)
        payload["max_set_count"] = len(certs)
        payload["max_set_partitions"] = [list(p) for p in parts]
        payload["cap_exceeded"] = exceeded
    if not isinstance(verify_indeque(g, result.certificate.covered), ClusterCertificate):
        raise CliError("internal: certificate failed re-verification")
    _emit(payload)
    return 0


def _cmd_approx(args) -> int:
    g = _load_single_graph(args.input, args.format)
    if args.explain:
        print(format_block_forest(decompose(g)), file=sys.stderr)
    if args.method == "forest":
        try:
            chosen = indeque_forest(g)
        except CyclicInputError as exc:
            raise CliError(f"cyclic input: cycle {exc.cycle}") from exc
        guarantee = math.ceil(2 * g.n / 3)
    elif args.method == "pw2":
        try:
            detail = indeque_pw2_detailed(g)
        except StructureMismatch as exc:
            raise CliError(f"structure mismatch: {exc.reason}") from exc
        if args.trace:
            for step in detail.steps:
                print(
                    f"case {step.case}: removed {list(step.removed)}"
                    f" added {list(step.added)}",
                    file=sys.stderr,
                )
        chosen = set(detail.selected)
        guarantee = math.ceil(g.n / 2)
    else:
        if args.coloring:
            col = parse_coloring(_read_text(args.coloring))
        else:
            col = greedy_acyclic_coloring(g)
        try:
            chosen = indeque_via_coloring(g, col)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        guarantee = coloring_guarantee(g.n, col.count)
    cert = verify_indeque(g, chosen)
    if not isinstance(cert, ClusterCertificate):
        raise CliError("internal: approximation output failed verification")
    if len(chosen) < guarantee:
        raise CliError(
            f"internal: size {len(chosen)} below the guarantee {guarantee}"
        )
    _emit(
        {
            "size": len(chosen),
            "set": sorted(chosen),
            "certificate": cert.to_json(),
            "guarantee": guarantee,
        }
    )
    return 0


def _scan_work(item):
    index, line = item
    g = parse_graph6(line)
    return index, g.n, solve(g).value


def _cmd_scan(args) -> int:
    text = _read_text(args.input)
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines:
        raise CliError("no graph")
    jobs = []
    bad = 0
    for i, ln in lines:
        try:
            parse_graph6(ln)
        except Graph6Error as exc:
            if args.strict:
                raise CliError(f"line {i + 1}: {exc}") from exc
            print(f"line {i + 1}: {exc}", file=sys.stderr)
            bad += 1
            continue
        jobs.append((i, ln))
    results = []
    if args.workers > 1 and len(jobs) > 1:
        with multiprocessing.Pool(args.workers) as pool:
            results = list(pool.imap(_scan_work, jobs, chunksize=8))
    else:
        results = [_scan_work(job) for job in jobs]

    best = None  # (ratio, index, n, value, line)
    per_size: dict[int, tuple] = {}
    for (index, line), (_, n, value) in zip(jobs, results):
        if n == 0:
            print(f"line {index + 1}: empty graph has no ratio", file=sys.stderr)
            bad += 1
            continue
        ratio = value / n
        if best is None or ratio < best[0]:
            best = (ratio, index, n, value, line)
        prev = per_size.get(n)
        if prev is None or value < prev[0]:
            per_size[n] = (value, ratio, index)
    if best is None:
        raise CliError("no graph")
    _emit(
        {
            "count": len(results),
            "errors": bad,
            "min_ratio": best[0],
            "argmin": {
                "index": best[1],
                "graph6": best[4],
                "vertices": best[2],
                "value": best[3],
            },
            "per_size": [
                {"vertices": n, "value": v, "ratio": r, "index": i}
                for n, (v, r, i) in sorted(per_size.items())
            ],
        }
    )
    return 0


_FAMILIES = {
    "path": lambda p: generators.path(int(p[0])),
    "cycle": lambda p: generators.cycle(int(p[0])),
    "complete": lambda p: generators.complete(int(p[0])),
    "star": lambda p: generators.star(int(p[0])),
    "matching": lambda p: generators.matching_with_isolated(int(p[0])),
    "triangular": lambda p: generators.triangular_grid(int(p[0]))[0],
    "apex-octahedron": lambda p: generators.apexiated_octahedron(),
    "random-forest": lambda p: generators.random_forest(int(p[0]), int(p[1])),
    "random-pw2": lambda p: generators.random_pw2(int(p[0]), int(p[1])),
}

_FAMILY_ARITY = {
    "path": 1, "cycle": 1, "complete": 1, "star": 1, "matching": 1,
    "triangular": 1, "apex-octahedron": 0, "random-forest": 2, "random-pw2": 2,
}


def _cmd_gen(args) -> int:
    fam = args.family
    if fam not in _FAMILIES:
        print(f"unknown family {fam!r}; choose from {sorted(_FAMILIES)}", file=sys.stderr)
        return 2
    if len(args.params) != _FAMILY_ARITY[fam]:
        print(
            f"family {fam!r} takes {_FAMILY_ARITY[fam]} parameter(s)",
            file=sys.stderr,
        )
        return 2
    try:
        g = _FAMILIES[fam](args.params)
    except (ValueError, IndexError) as exc:
        raise CliError(str(exc)) from exc
    if args.format == "edgelist":
        sys.stdout.write(serialize_edge_list(g))
    else:
        print(serialize_graph6(g))
    return 0


def _cmd_verify(args) -> int:
    g = _load_single_graph(args.input, args.format)
    tokens = []
    for ln in _read_text(args.set_file).splitlines():
        s = ln.split("#", 1)[0]
        tokens.extend(s.split())
    try:
        chosen = [int(t) for t in tokens]
    except ValueError as exc:
        raise CliError(f"set file: {exc}") from exc
    try:
        outcome = verify_indeque(g, chosen)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    _emit(outcome.to_json())
    return 0


def _parse_range(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


def _cmd_ratio_table(args) -> int:
    fam = args.family
    if fam not in _FAMILIES or _FAMILY_ARITY[fam] != 1:
        print(f"unknown family {fam!r} for ratio-table", file=sys.stderr)
        return 2
    try:
        rng = _parse_range(args.range)
    except ValueError as exc:
        raise CliError(f"bad range {args.range!r}: {exc}") from exc
    cap = args.limit
    print("n,vertices,value,ratio,method")
    for n in rng:
        try:
            g = _FAMILIES[fam]([n])
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        if g.n <= cap:
            value = solve(g).value
            method = "exact"
        elif fam == "triangular":
            chosen = generators.triangular_indeque_pattern(n)
            cert = verify_indeque(g, chosen)
            if not isinstance(cert, ClusterCertificate):
                raise CliError("internal: pattern failed verification")
            value = len(chosen)
            method = "lower-bound"
        else:
            raise CliError(
                f"{fam} at n={n} has {g.n} vertices, above the exact limit {cap};"
                " only the triangular family has a lower-bound fallback"
            )
        ratio = value / g.n
        print(f"{n},{g.n},{value},{ratio:.6f},{method}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="indeque",
        description="Indeque number: exact solving, guaranteed approximations,"
        " generators, and graph6 stream scans.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact indeque number with certificate")
    p.add_argument("input", help="graph6/edge-list file, or - for stdin")
    p.add_argument("--format", choices=["graph6", "edgelist"])
    p.add_argument("--method", choices=["brute", "branch"], default="branch")
    p.add_argument("--enumerate-max", action="store_true",
                   help="also enumerate maximum sets and their clique-size partitions")
    p.add_argument("--cap", type=int, default=10000,
                   help="cap for --enumerate-max (default 10000)")
    p.add_argument("--limit", type=int, default=None,
                   help="override the brute-force size limit")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("approx", help="guaranteed constructive approximations")
    p.add_argument("input")
    p.add_argument("--format", choices=["graph6", "edgelist"])
    p.add_argument("--method", choices=["forest", "pw2", "coloring"], required=True)
    p.add_argument("--coloring", help="coloring file (vertexId colorId per line)")
    p.add_argument("--trace", action="store_true",
                   help="print per-step case/removed/added to stderr (pw2)")
    p.add_argument("--explain", action="store_true",
                   help="print the block forest to stderr")
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("gen", help="emit a named graph family")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="certify or refute a vertex set")
    p.add_argument("input")
    p.add_argument("set_file", help="file of whitespace-separated vertex ids")
    p.add_argument("--format", choices=["graph6", "edgelist"])
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="per-graph ratios over a graph6 stream")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--strict", action="store_true",
                   help="abort on the first malformed line")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("ratio-table", help="CSV of value/ratio over a family range")
    p.add_argument("family")
    p.add_argument("range", help="N or LO..HI")
    p.add_argument("--limit", type=int, default=None,
                   help="exact-solve size cutoff (default: oracle limit)")
    p.set_defaults(func=_cmd_ratio_table)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "limit", None) is None and hasattr(args, "limit"):
        from .graph import oracle_limit

        args.limit = oracle_limit()
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
