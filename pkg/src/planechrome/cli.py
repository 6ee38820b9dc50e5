"""Command-line front end: ``planechrome <command> ...``.

Exit status is 0 when every check in the report passes, 1 when a check is
refuted and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path
from typing import Sequence

from . import __version__, data
from .coloring import Coloring, ConstraintSpec, enumerate_colorings
from .geometry import format_points, parse_points, points_from_abcd
from .graphs import CATALOG_NAMES, catalog, export
from .verify import Check

WORKERS_ENV = "PLANECHROME_WORKERS"


class UsageError(Exception):
    pass


def _digest(payload) -> str:
    if not isinstance(payload, (bytes, bytearray)):
        payload = json.dumps(payload, sort_keys=True).encode()
    return hashlib.sha256(payload).hexdigest()[:16]


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _graph(name: str):
    try:
        return catalog(name)
    except KeyError:
        raise UsageError(f"unknown graph {name!r}; choose from {', '.join(CATALOG_NAMES)}") from None


def _workers(args) -> int:
    if getattr(args, "workers", None) is not None:
        n = args.workers
    else:
        env = os.environ.get(WORKERS_ENV)
        try:
            n = int(env) if env else 1
        except ValueError:
            raise UsageError(f"{WORKERS_ENV} must be an integer, got {env!r}") from None
    if n < 1:
        raise UsageError("worker count must be at least 1")
    return n


class Report:
    def __init__(self, argv: Sequence[str]):
        self.doc = {"command": list(argv), "version": __version__, "checks": [],
                    "counts": {}, "timings": {}, "inputs": {}, "figures": []}
        self._t0 = time.perf_counter()

    def add(self, check: Check):
        self.doc["checks"].append(check.as_dict())

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.doc["checks"])

    def emit(self, as_json: bool, out=None):
        out = out or sys.stdout
        self.doc["timings"]["total_seconds"] = round(time.perf_counter() - self._t0, 3)
        self.doc["passed"] = self.passed
        if as_json:
            json.dump(self.doc, out, indent=1, sort_keys=True, default=str)
            out.write("\n")
            return
        for c in self.doc["checks"]:
            status = "PASS" if c["passed"] else "FAIL"
            out.write(f"{status}\t{c['name']}\texpected={_short(c['expected'])}"
                      f"\tobserved={_short(c['observed'])}\t{c['seconds']}s\n")
        for key, val in self.doc["counts"].items():
            out.write(f"count\t{key}\t{_short(val)}\n")
        for path in self.doc["figures"]:
            out.write(f"figure\t{path}\n")


def _short(v) -> str:
    return json.dumps(v, sort_keys=True, default=str) if isinstance(v, (dict, list)) else str(v)


def _figdir(args) -> Path | None:
    if not getattr(args, "figures", None):
        return None
    d = Path(args.figures)
    try:
        d.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise UsageError(f"cannot create {d}: {exc.strerror}") from None
    return d


# -- commands -------------------------------------------------------------------

def cmd_catalog(args, rep: Report):
    g = _graph(args.name)
    if args.export:
        return _write_export(g, args.export, args.out)
    # --stats is the default view
    rep.doc["counts"].update(g.stats())
    rep.doc["inputs"][g.name] = _digest([repr(p) for p in g.points])
    return rep


def _write_export(g, fmt: str, out: str | None):
    try:
        blob = export(g, fmt)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if out:
        try:
            Path(out).write_bytes(blob)
        except OSError as exc:
            raise UsageError(f"cannot write {out}: {exc.strerror}") from None
    else:
        sys.stdout.buffer.write(blob)
    return None


def cmd_export(args, rep: Report):
    return _write_export(_graph(args.name), args.format, args.out)


def cmd_verify(args, rep: Report):
    from .verify import run_claims

    gens = None
    if args.generators:
        try:
            gens = parse_points(_read(args.generators))
        except ValueError as exc:
            raise UsageError(f"{args.generators}: {exc}") from None
        rep.doc["inputs"]["generators"] = _digest(_read(args.generators).encode())
    else:
        rep.doc["inputs"]["generators"] = _digest(data.APPENDIX_ABCD)
    for check in run_claims(args.claim, _workers(args), gens):
        rep.add(check)
    figs = _figdir(args)
    if figs:
        from .plotting import save_graph_figure

        names = {"claim1": ["g40", "g79"], "claim2": ["g49"], "claim3": ["g51", "g627"]}
        for claim, gs in names.items():
            if args.claim in (claim, "all"):
                for name in gs:
                    rep.doc["figures"].append(str(save_graph_figure(catalog(name), figs / f"{name}.png")))
    return rep


def _parse_equal(g, text: str) -> tuple[int, ...]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok in g.specials:
            out.append(g.specials[tok])
        elif tok.isdigit() and int(tok) < g.n:
            out.append(int(tok))
        else:
            raise UsageError(f"--fix-equal: {tok!r} is neither a marked vertex of {g.name} nor an index")
    if len(out) < 2:
        raise UsageError("--fix-equal needs at least two vertices")
    return tuple(out)


def cmd_colorings(args, rep: Report):
    g = _graph(args.name)
    groups = (_parse_equal(g, args.fix_equal),) if args.fix_equal else ()
    spec = ConstraintSpec(aux=args.aux, equal_groups=groups)
    lines: list[str] = []

    def visit(c):
        if not args.count_only:
            lines.append(" ".join(map(str, c)))

    t0 = time.perf_counter()
    n = enumerate_colorings(g, spec, visit, canonical=not args.raw, limit=args.limit)
    rep.doc["counts"].update({"graph": g.name, "colorings": n, "canonical": not args.raw,
                              "limit": args.limit})
    rep.doc["timings"]["enumerate_seconds"] = round(time.perf_counter() - t0, 3)
    if not args.count_only and not args.json:
        sys.stdout.write("".join(line + "\n" for line in lines))
    elif not args.count_only:
        rep.doc["colorings"] = lines
    return rep


def _hardest_colors() -> list[int]:
    colors = [0] * len(data.G51_ABCD)
    for c, members in data.HARDEST_COLOR_CLASSES.items():
        for v in members:
            colors[v - 1] = c
    return colors


def _load_coloring(args, g, rep: Report) -> list[int]:
    if not args.coloring:
        if g.n != len(data.G51_ABCD):
            raise UsageError(f"--coloring is required for {g.name}")
        return _hardest_colors()
    text = _read(args.coloring)
    try:
        col = Coloring.parse(text, g.n)
    except ValueError as exc:
        raise UsageError(f"{args.coloring}: {exc}") from None
    if not col.is_complete():
        raise UsageError(f"{args.coloring}: every vertex of {g.name} needs a colour")
    rep.doc["inputs"]["coloring"] = _digest(text.encode())
    return col.colors


def cmd_forcing(args, rep: Report):
    from .forcing import ReplayError, eliminate_all, replay, run_chain

    g = _graph(args.graph)
    figs = _figdir(args)
    if args.action == "eliminate-all":
        from .coloring import enumerate_canonical

        cols: list[list[int]] = []
        enumerate_canonical(g, ConstraintSpec.abc_equal(g), visitor=cols.append, limit=args.limit)
        t0 = time.perf_counter()
        summary = eliminate_all(g.points, cols, args.max_add, g.unit_edges, _workers(args))
        d = summary.as_dict()
        d["union_reference_size"] = 576
        rep.doc["counts"].update(d)
        rep.add(Check("forcing.all_colorings_conflict", summary.total, summary.outcomes.get("Conflict", 0),
                      summary.success, round(time.perf_counter() - t0, 3)))
        if args.union_out:
            Path(args.union_out).write_text(format_points(summary.union))
        if figs:
            from .plotting import save_histogram

            rep.doc["figures"].append(str(save_histogram(
                summary.lengths, figs / "chain_lengths.png", "added vertices until conflict")))
        return rep
    colors = _load_coloring(args, g, rep)
    t0 = time.perf_counter()
    if args.action == "run":
        try:
            trace = run_chain(g.points, colors, args.max_add, g.unit_edges, tie_break=args.tie_break)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        rep.add(Check("forcing.run_reaches_conflict", "Conflict", trace.outcome,
                      trace.outcome == "Conflict" and trace.certify(),
                      round(time.perf_counter() - t0, 3),
                      {"conflict": trace.conflict, "tie_break": args.tie_break}))
        rep.doc["counts"]["additions"] = len(trace.steps)
        if args.additions_out:
            Path(args.additions_out).write_text(format_points(trace.additions))
    else:
        if args.additions:
            try:
                adds = parse_points(_read(args.additions))
            except ValueError as exc:
                raise UsageError(f"{args.additions}: {exc}") from None
        else:
            adds = points_from_abcd(data.HARDEST_ADDITIONS_ABCD)
        try:
            trace = replay(g.points, colors, adds, g.unit_edges)
        except ReplayError as exc:
            rep.add(Check("forcing.replay_valid", len(adds), exc.step - 1, False,
                          detail={"failed_step": exc.step, "reason": exc.reason}))
            return rep
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        rep.add(Check("forcing.replay_valid", len(adds), len(trace.steps), trace.certify(),
                      round(time.perf_counter() - t0, 3)))
        rep.add(Check("forcing.replay_outcome", "Conflict", trace.outcome, trace.outcome == "Conflict",
                      detail={"conflict": trace.conflict}))
        rep.doc["counts"]["additions"] = len(trace.steps)
    if figs:
        from .graphs import build_graph
        from .plotting import save_graph_figure

        grown = build_graph(trace.points, name=f"{g.name}+{len(trace.steps)}")
        cmap = {i: c for i, c in enumerate(trace.colors)}
        rep.doc["figures"].append(str(save_graph_figure(grown, figs / f"forcing_{args.action}.png", cmap)))
    return rep


def cmd_assemble(args, rep: Report):
    from .assembly import PlacementError, assemble

    try:
        stats = assemble(stats_only=not args.full)
    except PlacementError as exc:
        rep.add(Check("assembly.placements", "exact", str(exc), False))
        return rep
    rep.doc["counts"].update(stats)
    rep.add(Check("assembly.g49_placements", 118, stats["g49_placements"], stats["g49_placements"] == 118))
    rep.add(Check("assembly.g49_layer_pre_dedup", 5782, stats["g49_layer_vertices_pre_dedup"],
                  stats["g49_layer_vertices_pre_dedup"] == 5782))
    rep.add(Check("assembly.g627_placements", 2124, stats["g627_placements"], stats["g627_placements"] == 2124))
    rep.add(Check("assembly.closed_in_field", True, stats["closed_in_field"], stats["closed_in_field"]))
    return rep


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planechrome", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, workers=False, figures=False):
        sp.add_argument("--json", action="store_true", help="JSON report on stdout")
        if workers:
            sp.add_argument("--workers", type=int, default=None,
                            help=f"worker processes (default 1, or ${WORKERS_ENV})")
        if figures:
            sp.add_argument("--figures", metavar="DIR", help="write matplotlib figures into DIR")

    c = sub.add_parser("catalog", help="built-in graphs")
    c.add_argument("name")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--stats", action="store_true")
    g.add_argument("--export", metavar="FMT", choices=["dot", "json", "svg", "points"])
    c.add_argument("--out", metavar="FILE")
    common(c)

    v = sub.add_parser("verify", help="check the three claims")
    v.add_argument("claim", choices=["claim1", "claim2", "claim3", "all"])
    v.add_argument("--generators", metavar="FILE", help="point file replacing the 109 G627 generators")
    common(v, workers=True, figures=True)

    col = sub.add_parser("colorings", help="enumerate proper 4-colourings")
    col.add_argument("name")
    col.add_argument("--fix-equal", metavar="A,B,C", help="vertices forced to share a colour")
    col.add_argument("--count-only", action="store_true")
    col.add_argument("--limit", type=int, metavar="K")
    col.add_argument("--aux", action="store_true", help="also forbid monochromatic √(11/3) pairs")
    col.add_argument("--raw", action="store_true", help="count every colouring, not one per permutation class")
    common(col)

    f = sub.add_parser("forcing", help="forced-circumcentre chains")
    f.add_argument("action", choices=["run", "replay", "eliminate-all"])
    f.add_argument("--graph", default="g51")
    f.add_argument("--coloring", metavar="FILE", help="'index colour' lines (default: the hardest colouring)")
    f.add_argument("--additions", metavar="FILE", help="point file to replay (default: the 55 listed points)")
    f.add_argument("--max-add", type=int, default=500, metavar="N")
    f.add_argument("--limit", type=int, metavar="K", help="eliminate-all: first K colourings only")
    f.add_argument("--tie-break", default="lookahead", choices=["lookahead", "nearest", "age", "sort_key"])
    f.add_argument("--additions-out", metavar="FILE")
    f.add_argument("--union-out", metavar="FILE")
    common(f, workers=True, figures=True)

    a = sub.add_parser("assemble", help="placement arithmetic of the final graph")
    m = a.add_mutually_exclusive_group()
    m.add_argument("--stats-only", action="store_true", default=True)
    m.add_argument("--full", action="store_true", help="also deduplicate the full union (about a minute)")
    common(a)

    e = sub.add_parser("export", help="write a graph as dot, json, svg or points")
    e.add_argument("name")
    e.add_argument("--format", required=True, choices=["dot", "json", "svg", "points"])
    e.add_argument("--out", metavar="FILE")
    return p


COMMANDS = {"catalog": cmd_catalog, "verify": cmd_verify, "colorings": cmd_colorings,
            "forcing": cmd_forcing, "assemble": cmd_assemble, "export": cmd_export}


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    rep = Report(argv)
    try:
        out = COMMANDS[args.command](args, rep)
    except UsageError as exc:
        print(f"planechrome: error: {exc}", file=sys.stderr)
        return 2
    if out is None:
        return 0
    rep.emit(getattr(args, "json", False))
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
