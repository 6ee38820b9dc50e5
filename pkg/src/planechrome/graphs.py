"""Unit-distance graphs, the built-in catalog, and exporters."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Mapping, Sequence

import numpy as np

from . import data
from .field import ONE, FieldElement
from .geometry import (
    G79_ROTATION,
    Point,
    apply,
    dist2,
    format_points,
    points_from_abcd,
    symmetry_orbit,
)

AUX_DIST2 = FieldElement.rational(Fraction(11, 3))

# Float screen for candidate pairs; every accepted pair is re-checked exactly.
_SCREEN_TOL = 1e-7

CATALOG_NAMES = ("g40", "g79", "g49", "g51", "g627")


@dataclass(frozen=True)
class UnitDistanceGraph:
    points: tuple[Point, ...]
    unit_edges: tuple[tuple[int, int], ...]
    aux_edges: tuple[tuple[int, int], ...] = ()
    specials: Mapping[str, int] = field(default_factory=dict)
    name: str = ""

    @property
    def n(self) -> int:
        return len(self.points)

    def adjacency(self, aux: bool = False) -> list[list[int]]:
        adj = [[] for _ in range(self.n)]
        edges = list(self.unit_edges) + (list(self.aux_edges) if aux else [])
        for i, j in edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def index_of(self, p: Point) -> int:
        return self._index()[p]

    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {p: i for i, p in enumerate(self.points)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def stats(self) -> dict:
        return {
            "name": self.name,
            "vertices": self.n,
            "unit_edges": len(self.unit_edges),
            "aux_edges": len(self.aux_edges),
            "specials": dict(self.specials),
        }


def _float_coords(points: Sequence[Point]) -> np.ndarray:
    return np.array([p.to_float() for p in points], dtype=float).reshape(-1, 2)


def find_pairs(points: Sequence[Point], targets: Sequence[FieldElement], exact: bool = False) -> list[list[tuple[int, int]]]:
    """All index pairs whose squared distance equals each target, exactly.

    With ``exact=False`` a float screen selects candidate pairs first; the
    equality itself is always decided in exact arithmetic.
    """
    found = [[] for _ in targets]
    n = len(points)
    if n < 2:
        return found
    if exact:
        for i, j in combinations(range(n), 2):
            d = dist2(points[i], points[j])
            for k, t in enumerate(targets):
                if d == t:
                    found[k].append((i, j))
        return found
    xy = _float_coords(points)
    diff = xy[:, None, :] - xy[None, :, :]
    d2 = (diff ** 2).sum(axis=2)
    iu = np.triu_indices(n, 1)
    for k, t in enumerate(targets):
        tv = float(t)
        mask = np.abs(d2[iu] - tv) < _SCREEN_TOL * max(1.0, tv)
        for i, j in zip(iu[0][mask].tolist(), iu[1][mask].tolist()):
            if dist2(points[i], points[j]) == t:
                found[k].append((i, j))
    return found


def build_graph(points: Sequence[Point], specials: Mapping[str, int] | None = None,
                name: str = "", exact: bool = False) -> UnitDistanceGraph:
    """Deduplicate ``points`` and compute unit and √(11/3) edges."""
    specials = dict(specials or {})
    uniq: list[Point] = []
    where: dict[Point, int] = {}
    remap = []
    for p in points:
        if p not in where:
            where[p] = len(uniq)
            uniq.append(p)
        remap.append(where[p])
    new_specials = {}
    for key, idx in specials.items():
        if not 0 <= idx < len(points):
            raise ValueError(f"special vertex {key!r} index {idx} out of range")
        new_specials[key] = remap[idx]
    if len(set(new_specials.values())) != len(new_specials):
        raise ValueError("distinct special vertices collapse onto one point")
    unit, aux = find_pairs(uniq, [ONE, AUX_DIST2], exact=exact)
    return UnitDistanceGraph(tuple(uniq), tuple(unit), tuple(aux), new_specials, name)


def with_points(g: UnitDistanceGraph, points: Sequence[Point], name: str | None = None) -> UnitDistanceGraph:
    return build_graph(points, g.specials, name if name is not None else g.name)


# -- catalog ------------------------------------------------------------------

def g40_points() -> list[Point]:
    return points_from_abcd(data.G40_ABCD)


def g627_points(generators: Sequence[Point] | None = None) -> list[Point]:
    """G51 vertices first (list order), then the rest of the orbit by sort key."""
    gens = generators if generators is not None else points_from_abcd(data.APPENDIX_ABCD)
    orbit = symmetry_orbit(gens)
    head = points_from_abcd(data.G51_ABCD)
    taken = set(head)
    return head + [p for p in orbit if p not in taken]


@lru_cache(maxsize=None)
def catalog(name: str) -> UnitDistanceGraph:
    name = name.lower()
    if name == "g40":
        return build_graph(g40_points(), {"v1": 0, "v2": 1}, "g40")
    if name == "g79":
        base = g40_points()
        # the rotation fixes the origin, so the union holds 79 distinct points
        return build_graph(base + [apply(G79_ROTATION, p) for p in base],
                           {"v1": 0, "v2": 1, "v2_rotated": 41}, "g79")
    if name == "g49":
        return build_graph(points_from_abcd(data.G49_ABCD), {"P": 0, "Q": 1}, "g49")
    if name == "g51":
        return build_graph(points_from_abcd(data.G51_ABCD), {"A": 0, "B": 1, "C": 2}, "g51")
    if name == "g627":
        return build_graph(g627_points(), {"A": 0, "B": 1, "C": 2}, "g627")
    raise KeyError(f"unknown graph {name!r}; choose from {', '.join(CATALOG_NAMES)}")


# -- export -------------------------------------------------------------------

def to_dot(g: UnitDistanceGraph) -> str:
    lines = [f"graph {g.name or 'G'} {{"]
    for i, p in enumerate(g.points):
        x, y = p.to_float()
        lines.append(f'  {i} [label="{p!r}", pos="{x:.6f},{y:.6f}!"];')
    for i, j in g.unit_edges:
        lines.append(f"  {i} -- {j} [kind=unit];")
    for i, j in g.aux_edges:
        lines.append(f"  {i} -- {j} [kind=aux];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: UnitDistanceGraph) -> str:
    doc = {
        "name": g.name,
        "basis": ["1", "sqrt3", "sqrt11", "sqrt33", "sqrt247", "sqrt741", "sqrt2717", "sqrt8151"],
        "counts": {"vertices": g.n, "unit_edges": len(g.unit_edges), "aux_edges": len(g.aux_edges)},
        "points": [
            {"x": [str(c) for c in p.x.coeffs], "y": [str(c) for c in p.y.coeffs],
             "abcd": list(p.abcd()) if p.abcd() is not None else None}
            for p in g.points
        ],
        "unit_edges": [list(e) for e in g.unit_edges],
        "aux_edges": [list(e) for e in g.aux_edges],
        "specials": dict(g.specials),
    }
    return json.dumps(doc, indent=1) + "\n"


def export(g: UnitDistanceGraph, fmt: str) -> bytes:
    if fmt == "dot":
        return to_dot(g).encode()
    if fmt == "json":
        return to_json(g).encode()
    if fmt == "points":
        return format_points(g.points).encode()
    if fmt == "svg":
        from .plotting import graph_svg

        return graph_svg(g)
    raise ValueError(f"unknown export format {fmt!r}")
