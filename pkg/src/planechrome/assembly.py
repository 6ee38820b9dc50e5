"""Assembly of the final graph from G79, placed copies of G49 and of G627.

Each √(11/3) edge of G79 receives a copy of G49 with its marked pair (P, Q)
mapped onto the edge endpoints (lower vertex index first, direct isometry).
Every equilateral triangle of side² = 1/3 inside a placed G49 copy then
receives a copy of G627 with its marked vertices (A, B, C) on the triangle.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

import numpy as np

from .field import ONE, FieldElement
from .geometry import (
    Isometry,
    Point,
    align_segments,
    apply,
    dist2,
    find_equilateral_triangles,
)
from .graphs import UnitDistanceGraph, catalog, find_pairs

TRIANGLE_SIDE2 = Fraction(1, 3)


class PlacementError(RuntimeError):
    """A placed copy does not carry its marked vertices onto the targets."""


@dataclass(frozen=True)
class Placement:
    iso: Isometry
    targets: tuple[Point, ...]
    flipped: bool = False
    parent: Optional[int] = None  # G49 placement a triangle belongs to


@dataclass
class AssemblyPlan:
    base: UnitDistanceGraph
    g49: UnitDistanceGraph
    g627: UnitDistanceGraph
    triangles: list[tuple[int, int, int]]
    g49_placements: list[Placement] = field(default_factory=list)
    g627_placements: list[Placement] = field(default_factory=list)

    def g49_layer_points(self) -> Iterator[Point]:
        for pl in self.g49_placements:
            for p in self.g49.points:
                yield apply(pl.iso, p)


def _elements(iso: Isometry) -> tuple[FieldElement, ...]:
    t = iso.translation
    return (iso.a, iso.b, iso.c, iso.d, t.x, t.y)


def _place(src: Sequence[Point], dst: Sequence[Point], allow_flip: bool) -> Placement:
    """Isometry taking src[k] to dst[k] for every k; direct first, then mirrored."""
    for flip in ((False, True) if allow_flip else (False,)):
        iso = align_segments(src[0], src[1], dst[0], dst[1], flip=flip)
        if all(apply(iso, p) == q for p, q in zip(src, dst)):
            return Placement(iso, tuple(dst), flip)
    raise PlacementError(f"no isometry maps {list(src)!r} onto {list(dst)!r}")


def build_plan(base: UnitDistanceGraph | None = None, g49: UnitDistanceGraph | None = None,
               g627: UnitDistanceGraph | None = None) -> AssemblyPlan:
    base = base or catalog("g79")
    g49 = g49 or catalog("g49")
    g627 = g627 or catalog("g627")
    tris = [t.vertices for t in find_equilateral_triangles(g49.points, TRIANGLE_SIDE2)]
    plan = AssemblyPlan(base, g49, g627, tris)
    pq = [g49.points[g49.specials["P"]], g49.points[g49.specials["Q"]]]
    abc = [g627.points[g627.specials[k]] for k in ("A", "B", "C")]
    for i, j in sorted(base.aux_edges):
        pl = _place(pq, [base.points[i], base.points[j]], allow_flip=False)
        plan.g49_placements.append(pl)
    for k, pl in enumerate(plan.g49_placements):
        for tri in tris:
            targets = [apply(pl.iso, g49.points[v]) for v in tri]
            sub = _place(abc, targets, allow_flip=True)
            plan.g627_placements.append(Placement(sub.iso, sub.targets, sub.flipped, k))
    return plan


def check_plan(plan: AssemblyPlan, edge_sample: int = 8) -> dict:
    """Re-verify marked vertices and unit edges of every placed copy.

    G49 copies are checked on all their unit edges, G627 copies on the first
    ``edge_sample`` unit edges (isometries preserve all of them).
    """
    g49, g627 = plan.g49, plan.g627
    pq = [g49.points[g49.specials["P"]], g49.points[g49.specials["Q"]]]
    abc = [g627.points[g627.specials[k]] for k in ("A", "B", "C")]
    edges_checked = 0
    for pl in plan.g49_placements:
        if [apply(pl.iso, p) for p in pq] != list(pl.targets):
            raise PlacementError("G49 copy misses its aux edge")
        for i, j in g49.unit_edges:
            if dist2(apply(pl.iso, g49.points[i]), apply(pl.iso, g49.points[j])) != ONE:
                raise PlacementError("G49 copy loses a unit edge")
            edges_checked += 1
    sample = g627.unit_edges[:edge_sample]
    for pl in plan.g627_placements:
        if [apply(pl.iso, p) for p in abc] != list(pl.targets):
            raise PlacementError("G627 copy misses its triangle")
        for i, j in sample:
            if dist2(apply(pl.iso, g627.points[i]), apply(pl.iso, g627.points[j])) != ONE:
                raise PlacementError("G627 copy loses a unit edge")
            edges_checked += 1
    # every coefficient is a field element, so images stay in the field
    closed = all(isinstance(e, FieldElement) for pl in plan.g49_placements + plan.g627_placements
                 for e in _elements(pl.iso))
    return {"edges_checked": edges_checked, "closed_in_field": closed}


def _float_images(iso: Isometry, xy: np.ndarray) -> np.ndarray:
    a, b, c, d = (float(e) for e in (iso.a, iso.b, iso.c, iso.d))
    tx, ty = iso.translation.to_float()
    return np.column_stack([a * xy[:, 0] + b * xy[:, 1] + tx, c * xy[:, 0] + d * xy[:, 1] + ty])


def _exact_images(plan: AssemblyPlan, copy: int) -> list[Point]:
    n49 = len(plan.g49_placements)
    if copy < 0:
        return list(plan.base.points)
    if copy < n49:
        iso, pts = plan.g49_placements[copy].iso, plan.g49.points
    else:
        iso, pts = plan.g627_placements[copy - n49].iso, plan.g627.points
    return [apply(iso, p) for p in pts]


def dedup_union(plan: AssemblyPlan, include_g627: bool = True, tol: float = 1e-7,
                edges: bool = False) -> dict:
    """Exact number of distinct points in the union of all placed copies.

    Float images far below ``tol`` apart are linked into clusters (equal exact
    points differ by rounding error only); each cluster with more than one
    member is then split in exact arithmetic. With ``edges`` the report adds
    the number of distinct unit edges inherited from the copies, which is
    exact, and a float count of unit-distance pairs among distinct points,
    which is not confirmed exactly.
    """
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import connected_components
    from scipy.spatial import cKDTree

    copies = [(-1, plan.base)] + [(k, plan.g49) for k in range(len(plan.g49_placements))]
    if include_g627:
        off = len(plan.g49_placements)
        copies += [(off + k, plan.g627) for k in range(len(plan.g627_placements))]
    base_xy, blocks, refs = {}, [], []
    for copy, g in copies:
        xy = base_xy.get(g.name)
        if xy is None:
            xy = base_xy[g.name] = np.array([p.to_float() for p in g.points])
        blocks.append(xy if copy < 0 else _float_images(_placement(plan, copy).iso, xy))
        refs.append(np.column_stack([np.full(g.n, copy), np.arange(g.n)]))
    xy, ref = np.vstack(blocks), np.vstack(refs)
    pairs = cKDTree(xy).query_pairs(tol, output_type="ndarray")
    m = len(xy)
    adj = coo_matrix((np.ones(len(pairs)), (pairs[:, 0], pairs[:, 1])), shape=(m, m))
    n_comp, label = connected_components(adj, directed=False)
    sizes = np.bincount(label)
    multi = np.nonzero(sizes[label] > 1)[0]
    distinct = int(n_comp)
    # walk copies in order so each copy's exact images are computed once
    by_copy: dict[int, list[int]] = {}
    for r in multi.tolist():
        by_copy.setdefault(int(ref[r, 0]), []).append(r)
    seen: dict[int, set] = {}
    for copy, rows in by_copy.items():
        pts = _exact_images(plan, copy)
        for r in rows:
            seen.setdefault(int(label[r]), set()).add(pts[int(ref[r, 1])])
    distinct += sum(len(s) - 1 for s in seen.values())
    out = {"points_pre_dedup": int(m), "distinct_points": distinct, "float_clusters": int(n_comp)}
    if edges:
        out.update(_edge_counts(plan, copies, label, xy, n_comp, distinct == n_comp, tol))
    return out


def _edge_counts(plan, copies, label, xy, n_comp, clusters_exact, tol) -> dict:
    """Unit edges carried over from the copies (exact) and a float annulus count."""
    from scipy.spatial import cKDTree

    out = {}
    if clusters_exact:
        keys, start = [], 0
        for copy, g in copies:
            e = np.array(g.unit_edges, dtype=np.int64).reshape(-1, 2) + start
            a, b = label[e[:, 0]], label[e[:, 1]]
            keys.append(np.minimum(a, b).astype(np.int64) * n_comp + np.maximum(a, b))
            start += g.n
        out["inherited_unit_edges"] = int(len(np.unique(np.concatenate(keys))))
    rep = np.zeros((n_comp, 2))
    rep[label] = xy
    tree = cKDTree(rep)
    lo, hi = tree.count_neighbors(tree, [1 - tol, 1 + tol])
    out["unit_pairs_float_screen"] = int((hi - lo) // 2)
    return out


def _placement(plan: AssemblyPlan, copy: int) -> Placement:
    n49 = len(plan.g49_placements)
    return plan.g49_placements[copy] if copy < n49 else plan.g627_placements[copy - n49]


def assemble(stats_only: bool = True, plan: AssemblyPlan | None = None) -> dict:
    """Build and check the plan; with ``stats_only=False`` also dedup the full union."""
    t0 = time.perf_counter()
    plan = plan or build_plan()
    n49, n627 = len(plan.g49_placements), len(plan.g627_placements)
    report = {
        "base_vertices": plan.base.n,
        "g49_placements": n49,
        "g49_layer_vertices_pre_dedup": n49 * plan.g49.n,
        "triangles_per_g49": len(plan.triangles),
        "g627_placements": n627,
        "g627_layer_vertices_pre_dedup": n627 * plan.g627.n,
        "mirrored_g627_placements": sum(pl.flipped for pl in plan.g627_placements),
        "vertex_bound": plan.base.n + n49 * plan.g49.n + n627 * plan.g627.n,
    }
    report.update(check_plan(plan))
    layer = dedup_union(plan, include_g627=False, edges=True)
    report["g49_layer_distinct_with_base"] = layer["distinct_points"]
    report["g49_layer_inherited_unit_edges"] = layer.get("inherited_unit_edges")
    pts = list(dict.fromkeys(list(plan.base.points) + list(plan.g49_layer_points())))
    report["g49_layer_unit_edges"] = len(find_pairs(pts, [ONE])[0])
    if not stats_only:
        report["full"] = dedup_union(plan, include_g627=True, edges=True)
    report["seconds"] = round(time.perf_counter() - t0, 3)
    return report


__all__ = [
    "AssemblyPlan", "Placement", "PlacementError", "build_plan", "check_plan",
    "dedup_union", "assemble",
]
