"""Forcing chains: extend a coloured unit-distance graph by forced circumcentres.

If three points of pairwise different colours all lie at distance 1 from a
point X, then X must take the fourth colour. Starting from a properly
coloured graph we keep adding such points X until two points at unit distance
share a colour (a conflict), no candidate is left (stuck), or a step limit is
reached.

Candidate centres are located with a float screen (intersections of unit
circles around differently coloured pairs) and then confirmed exactly; the
float values never decide anything on their own. ``exact=True`` replaces the
screen by a scan over every triple.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .coloring import K
from .field import ONE, sort_real
from .geometry import Point, circumcircle, dist2

_TOL = 1e-6
MAX_ADDITIONS = 500


class ReplayError(ValueError):
    """A replayed point is not a forced circumcentre of the current graph."""

    def __init__(self, step: int, point: Point, reason: str):
        super().__init__(f"step {step} ({point!r}): {reason}")
        self.step = step
        self.point = point
        self.reason = reason


@dataclass(frozen=True)
class ForcingStep:
    triple: tuple[int, int, int]
    center: Point
    forced_color: int


@dataclass
class ForcingTrace:
    n_initial: int
    points: list[Point]
    colors: list[int]
    steps: list[ForcingStep] = field(default_factory=list)
    outcome: str = "Stuck"
    conflict: Optional[tuple[int, int]] = None

    @property
    def additions(self) -> list[Point]:
        return [s.center for s in self.steps]

    def certify(self) -> bool:
        """Independent exact re-check of the recorded outcome and every step."""
        for k, step in enumerate(self.steps):
            idx = self.n_initial + k
            if self.points[idx] != step.center or self.colors[idx] != step.forced_color:
                return False
            tri_colors = {self.colors[v] for v in step.triple}
            if len(tri_colors) != 3 or step.forced_color in tri_colors:
                return False
            if any(v >= idx or dist2(self.points[v], step.center) != ONE for v in step.triple):
                return False
        if self.outcome == "Conflict":
            i, j = self.conflict
            return self.colors[i] == self.colors[j] and dist2(self.points[i], self.points[j]) == ONE
        return True


class ColoredGraph:
    """Growing point set with colours, exact unit adjacency and a float mirror."""

    def __init__(self, points: Sequence[Point], colors: Sequence[int],
                 unit_edges: Iterable[tuple[int, int]] | None = None):
        if len(points) != len(colors):
            raise ValueError("one colour per point required")
        if any(c not in range(1, K + 1) for c in colors):
            raise ValueError("colours must lie in 1..4")
        self.points: list[Point] = list(points)
        self.colors: list[int] = list(colors)
        self.index = {p: i for i, p in enumerate(self.points)}
        if len(self.index) != len(self.points):
            raise ValueError("duplicate points")
        self.xy = np.array([p.to_float() for p in self.points], dtype=float).reshape(-1, 2)
        self.nbrs: list[set[int]] = [set() for _ in self.points]
        if unit_edges is None:
            unit_edges = self._scan_unit_pairs()
        self.conflicts: list[tuple[int, int]] = []
        for i, j in unit_edges:
            self._link(i, j)
        self._center_cache: dict[tuple[int, int, int], Optional[Point]] = {}
        # centre -> oldest triple, maintained incrementally once built
        self._cands: Optional[dict[Point, tuple[int, int, int]]] = None
        # centre -> colours present among its unit neighbours
        self._cand_colors: dict[Point, set[int]] = {}
        self._norms: dict[Point, object] = {}

    @property
    def n(self) -> int:
        return len(self.points)

    def _scan_unit_pairs(self):
        n = self.n
        if n < 2:
            return []
        d2 = ((self.xy[:, None, :] - self.xy[None, :, :]) ** 2).sum(axis=2)
        iu = np.triu_indices(n, 1)
        mask = np.abs(d2[iu] - 1.0) < _TOL
        return [(i, j) for i, j in zip(iu[0][mask].tolist(), iu[1][mask].tolist())
                if dist2(self.points[i], self.points[j]) == ONE]

    def _link(self, i: int, j: int) -> None:
        self.nbrs[i].add(j)
        self.nbrs[j].add(i)
        if self.colors[i] == self.colors[j]:
            self.conflicts.append((min(i, j), max(i, j)))

    def unit_neighbors_of(self, p: Point) -> list[int]:
        """Exact unit-distance neighbours of an arbitrary point, float-screened."""
        if self.n == 0:
            return []
        x, y = p.to_float()
        d2 = (self.xy[:, 0] - x) ** 2 + (self.xy[:, 1] - y) ** 2
        cand = np.nonzero(np.abs(d2 - 1.0) < _TOL)[0].tolist()
        return [k for k in cand if dist2(self.points[k], p) == ONE]

    def add(self, p: Point, color: int) -> int:
        if p in self.index:
            raise ValueError(f"{p!r} already present")
        nb = self.unit_neighbors_of(p)
        idx = self.n
        self.points.append(p)
        self.colors.append(color)
        self.index[p] = idx
        self.xy = np.vstack([self.xy, np.array(p.to_float()).reshape(1, 2)])
        self.nbrs.append(set())
        for k in nb:
            self._link(idx, k)
        if self._cands is not None:
            self._cands.pop(p, None)
            self._cand_colors.pop(p, None)
            if self._cand_colors:
                centers = list(self._cand_colors)
                cxy = np.array([c.to_float() for c in centers])
                d2 = ((cxy - np.array(p.to_float())) ** 2).sum(axis=1)
                for r in np.nonzero(np.abs(d2 - 1.0) < _TOL)[0].tolist():
                    if dist2(centers[r], p) == ONE:
                        self._cand_colors[centers[r]].add(color)
            self._collect(self._screened_triples(pivot=idx), self._cands)
        return idx

    def _norm2(self, p: Point):
        got = self._norms.get(p)
        if got is None:
            got = self._norms[p] = p.x * p.x + p.y * p.y
        return got

    def _hot_centers(self, steps) -> set:
        """Centres with another candidate at unit distance forced to the same colour."""
        hot = set()
        if len(steps) < 2:
            return hot
        cxy = np.array([st.center.to_float() for st in steps])
        d2 = ((cxy[:, None, :] - cxy[None, :, :]) ** 2).sum(axis=2)
        rows, cols = np.nonzero(np.abs(d2 - 1.0) < _TOL)
        for a, b in zip(rows.tolist(), cols.tolist()):
            if a < b and steps[a].forced_color == steps[b].forced_color \
                    and dist2(steps[a].center, steps[b].center) == ONE:
                hot.add(steps[a].center)
                hot.add(steps[b].center)
        return hot

    def neighbor_colors(self, c: Point) -> set[int]:
        """Colours among the exact unit neighbours of a candidate centre."""
        got = self._cand_colors.get(c)
        if got is None:
            got = {self.colors[k] for k in self.unit_neighbors_of(c)}
            if self._cands is not None and c in self._cands:
                self._cand_colors[c] = got
        return got

    def first_conflict(self) -> Optional[tuple[int, int]]:
        return min(self.conflicts) if self.conflicts else None

    # -- candidate centres ------------------------------------------------

    def exact_center(self, tri: tuple[int, int, int]) -> Optional[Point]:
        """Circumcentre of ``tri`` if its squared circumradius is exactly 1."""
        if tri not in self._center_cache:
            res = circumcircle(*(self.points[v] for v in tri))
            self._center_cache[tri] = res[0] if res is not None and res[1] == ONE else None
        return self._center_cache[tri]

    def _screened_triples(self, pivot: int | None = None) -> Iterable[tuple[int, int, int]]:
        """Float-screened trichromatic triples whose circumcircle may be unit.

        With ``pivot`` only triples containing that vertex are produced.
        """
        n = self.n
        if n < 3:
            return
        xy, colors = self.xy, np.array(self.colors)
        if pivot is None:
            iu, ju = np.triu_indices(n, 1)
        else:
            others = np.array([k for k in range(n) if k != pivot], dtype=int)
            iu, ju = others, np.full(len(others), pivot)
        diff = xy[ju] - xy[iu]
        d2 = (diff ** 2).sum(axis=1)
        ok = (colors[iu] != colors[ju]) & (d2 <= 4.0 + _TOL) & (d2 > 0)
        iu, ju, diff, d2 = iu[ok], ju[ok], diff[ok], d2[ok]
        if len(iu) == 0:
            return
        mid = (xy[iu] + xy[ju]) / 2
        h = np.sqrt(np.maximum(0.0, 1.0 / d2 - 0.25))
        perp = np.stack([-diff[:, 1], diff[:, 0]], axis=1) * h[:, None]
        for sign in (1.0, -1.0):
            cen = mid + sign * perp
            dd = ((cen[:, None, :] - xy[None, :, :]) ** 2).sum(axis=2)
            rows, ks = np.nonzero(np.abs(dd - 1.0) < _TOL)
            for r, k in zip(rows.tolist(), ks.tolist()):
                i, j = int(iu[r]), int(ju[r])
                if k in (i, j) or colors[k] == colors[i] or colors[k] == colors[j]:
                    continue
                if pivot is None and k < j:
                    continue
                yield tuple(sorted((i, j, k)))

    def _all_triples(self) -> Iterable[tuple[int, int, int]]:
        colors = self.colors
        for tri in combinations(range(self.n), 3):
            if len({colors[v] for v in tri}) == 3:
                yield tri

    def _collect(self, source, best: dict) -> dict:
        for tri in source:
            c = self.exact_center(tri)
            if c is None or c in self.index:
                continue
            if c not in best or _age(tri) < _age(best[c]):
                best[c] = tri
        return best

    def forced_centers(self, exact: bool = False, tie_break: str = "lookahead") -> list[ForcingStep]:
        """One step per new centre, ordered by ``tie_break``.

        Each centre is reported with its oldest trichromatic triple (compared
        newest vertex first) and the colour that triple forces.

        ``"sort_key"``: centre sort key only.
        ``"age"``: oldest triple first.
        ``"nearest"``: smallest exact distance to the origin first.
        ``"lookahead"``: centres whose unit neighbours already show all four
        colours, then centres with a unit-distance partner candidate forced to
        the same colour, then ``"nearest"``.
        All rules finish on the centre sort key, so the order is total.
        """
        if exact:
            best = self._collect(self._all_triples(), {})
        else:
            if self._cands is None:
                self._cands = self._collect(self._screened_triples(), {})
            best = self._cands
        steps = []
        for c, tri in best.items():
            missing = set(range(1, K + 1)) - {self.colors[v] for v in tri}
            steps.append(ForcingStep(tri, c, missing.pop()))
        steps.sort(key=lambda s: s.center.sort_key())
        if tie_break == "sort_key":
            return steps
        if tie_break == "age":
            steps.sort(key=lambda s: _age(s.triple))
        elif tie_break in ("nearest", "lookahead"):
            steps = sort_real(steps, lambda st: self._norm2(st.center))
            if tie_break == "lookahead":
                hot = self._hot_centers(steps)
                steps.sort(key=lambda s: (len(self.neighbor_colors(s.center)) < K, s.center not in hot))
        else:
            raise ValueError(f"unknown tie-break {tie_break!r}")
        return steps


def _age(tri: tuple[int, int, int]) -> tuple[int, int, int]:
    return tuple(sorted(tri, reverse=True))


def _check_proper(cg: ColoredGraph) -> None:
    if cg.conflicts:
        i, j = cg.first_conflict()
        raise ValueError(f"initial colouring is improper: vertices {i} and {j}")


def find_forced_centers(cg: ColoredGraph, exact: bool = False,
                        tie_break: str = "lookahead") -> list[ForcingStep]:
    return cg.forced_centers(exact=exact, tie_break=tie_break)


def run_chain(points: Sequence[Point], colors: Sequence[int],
              max_additions: int = MAX_ADDITIONS, unit_edges=None,
              exact: bool = False, tie_break: str = "lookahead") -> ForcingTrace:
    """Add the first forced centre under ``tie_break`` until conflict, stuck or limit."""
    cg = ColoredGraph(points, colors, unit_edges)
    _check_proper(cg)
    trace = ForcingTrace(cg.n, cg.points, cg.colors)
    while True:
        conflict = cg.first_conflict()
        if conflict is not None:
            trace.outcome, trace.conflict = "Conflict", conflict
            return trace
        if len(trace.steps) >= max_additions:
            trace.outcome = "LimitReached"
            return trace
        cands = cg.forced_centers(exact=exact, tie_break=tie_break)
        if not cands:
            trace.outcome = "Stuck"
            return trace
        step = cands[0]
        cg.add(step.center, step.forced_color)
        trace.steps.append(step)


def replay(points: Sequence[Point], colors: Sequence[int], additions: Sequence[Point],
           unit_edges=None) -> ForcingTrace:
    """Add exactly ``additions`` in order, validating each as a forced centre.

    A point is accepted if its exact unit neighbours include a trichromatic
    triple; it receives the colour missing from the smallest such triple.
    Raises ReplayError at the first point that fails.
    """
    cg = ColoredGraph(points, colors, unit_edges)
    _check_proper(cg)
    trace = ForcingTrace(cg.n, cg.points, cg.colors)
    for k, p in enumerate(additions, 1):
        if cg.first_conflict() is not None:
            raise ReplayError(k, p, "a conflict was already reached before this point")
        if p in cg.index:
            raise ReplayError(k, p, "point already present")
        nb = sorted(cg.unit_neighbors_of(p))
        tri = next((t for t in combinations(nb, 3)
                    if len({cg.colors[v] for v in t}) == 3), None)
        if tri is None:
            seen = sorted({cg.colors[v] for v in nb})
            raise ReplayError(k, p, f"unit neighbours carry colours {seen}, need three distinct")
        forced = (set(range(1, K + 1)) - {cg.colors[v] for v in tri}).pop()
        cg.add(p, forced)
        trace.steps.append(ForcingStep(tri, p, forced))
    conflict = cg.first_conflict()
    if conflict is not None:
        trace.outcome, trace.conflict = "Conflict", conflict
    else:
        trace.outcome = "Stuck"
    return trace


@dataclass
class EliminationSummary:
    outcomes: Counter
    lengths: Counter
    union: list[Point]
    traces_failed: list[int]

    @property
    def total(self) -> int:
        return sum(self.outcomes.values())

    @property
    def success(self) -> bool:
        return self.outcomes.get("Conflict", 0) == self.total

    def fraction_within(self, k: int) -> float:
        if not self.total:
            return 0.0
        return sum(v for length, v in self.lengths.items() if length <= k) / self.total

    def as_dict(self) -> dict:
        return {
            "colorings": self.total,
            "outcomes": dict(self.outcomes),
            "chain_length_histogram": {str(k): v for k, v in sorted(self.lengths.items())},
            "max_chain_length": max(self.lengths, default=0),
            "fraction_within_3": self.fraction_within(3),
            "union_size": len(self.union),
            "failed_indices": self.traces_failed,
            "success": self.success,
        }


def _chain_job(args):
    points, colors, max_additions, unit_edges = args
    tr = run_chain(points, colors, max_additions, unit_edges)
    return tr.outcome, len(tr.steps), tr.additions


def eliminate_all(points: Sequence[Point], colorings: Iterable[Sequence[int]],
                  max_additions: int = MAX_ADDITIONS, unit_edges=None,
                  workers: int = 1) -> EliminationSummary:
    """Run a forcing chain for every colouring and merge the results."""
    unit_edges = list(unit_edges) if unit_edges is not None else None
    jobs = ((points, list(c), max_additions, unit_edges) for c in colorings)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_chain_job, jobs, chunksize=16))
    else:
        results = [_chain_job(j) for j in jobs]
    outcomes, lengths, union, failed = Counter(), Counter(), set(), []
    for k, (outcome, length, added) in enumerate(results):
        outcomes[outcome] += 1
        lengths[length] += 1
        union.update(added)
        if outcome != "Conflict":
            failed.append(k)
    return EliminationSummary(outcomes, lengths, sorted(union, key=Point.sort_key), failed)
