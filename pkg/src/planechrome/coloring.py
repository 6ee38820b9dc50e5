"""Four-colouring search with forced-colour propagation.

The search follows the classic scheme: colouring a vertex removes that colour
from every neighbour's available set; an emptied set is a failure and a
singleton set forces the neighbour's colour. Vertices are branched on in graph
order. Undo uses a trail of (vertex, old mask, old colour) records.

Colours are 1..4; availability is a 4-bit mask with bit ``c - 1`` for colour c.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Optional, Sequence

from .graphs import UnitDistanceGraph

K = 4
FULL = (1 << K) - 1
BIT = {c: 1 << (c - 1) for c in range(1, K + 1)}
SINGLE = {1 << (c - 1): c for c in range(1, K + 1)}
POPCOUNT = [bin(m).count("1") for m in range(FULL + 1)]
MASK_COLORS = {m: [c for c in range(1, K + 1) if m >> (c - 1) & 1] for m in range(FULL + 1)}


@dataclass(frozen=True)
class ConstraintSpec:
    aux: bool = False
    preassign: tuple[tuple[int, int], ...] = ()
    equal_groups: tuple[tuple[int, ...], ...] = ()
    different: tuple[tuple[int, int], ...] = ()

    @classmethod
    def abc_equal(cls, g: UnitDistanceGraph, aux: bool = False) -> "ConstraintSpec":
        s = g.specials
        return cls(aux=aux, equal_groups=((s["A"], s["B"], s["C"]),))


@dataclass
class Coloring:
    """A (possibly partial) colouring; colour 0 means unassigned."""

    colors: list[int]
    available: list[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.available:
            self.available = [BIT[c] if c else FULL for c in self.colors]

    def is_complete(self) -> bool:
        return all(self.colors)

    def as_dict(self) -> dict[int, int]:
        return {v: c for v, c in enumerate(self.colors) if c}

    def format(self) -> str:
        return "".join(f"{v} {c}\n" for v, c in enumerate(self.colors) if c)

    @classmethod
    def parse(cls, text: str, n: int) -> "Coloring":
        colors = [0] * n
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'index color'")
            v, c = int(parts[0]), int(parts[1])
            if not (0 <= v < n and 1 <= c <= K):
                raise ValueError(f"line {lineno}: vertex or colour out of range")
            colors[v] = c
        return cls(colors)


def constraint_edges(g: UnitDistanceGraph, spec: ConstraintSpec) -> list[tuple[int, int]]:
    edges = list(g.unit_edges)
    if spec.aux:
        edges += list(g.aux_edges)
    edges += [tuple(e) for e in spec.different]
    return edges


def violations(g: UnitDistanceGraph, spec: ConstraintSpec, colors: Sequence[int]) -> list[str]:
    """Every constraint a complete colouring breaks (empty list = valid)."""
    bad = []
    for v, c in enumerate(colors):
        if c not in range(1, K + 1):
            bad.append(f"vertex {v} has colour {c}")
    for i, j in constraint_edges(g, spec):
        if colors[i] == colors[j]:
            bad.append(f"edge {i}-{j} monochromatic ({colors[i]})")
    for grp in spec.equal_groups:
        if len({colors[v] for v in grp}) != 1:
            bad.append(f"group {grp} not monochromatic")
    for v, c in spec.preassign:
        if colors[v] != c:
            bad.append(f"vertex {v} should be {c}")
    return bad


class _Reduced:
    """The constraint graph after collapsing equality groups to representatives."""

    def __init__(self, g: UnitDistanceGraph, spec: ConstraintSpec,
                 order: Sequence[int] | None = None):
        n = g.n
        order = list(range(n)) if order is None else list(order)
        if sorted(order) != list(range(n)):
            raise ValueError("vertex order must be a permutation of the vertices")
        parent = list(range(n))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for grp in spec.equal_groups:
            grp = list(grp)
            for v in grp[1:]:
                a, b = find(grp[0]), find(v)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        reps = []
        rep_index = {}
        self.vmap = [0] * n
        for v in order:
            r = find(v)
            if r not in rep_index:
                rep_index[r] = len(reps)
                reps.append(r)
            self.vmap[v] = rep_index[r]
        self.n = len(reps)
        self.members = [[] for _ in range(self.n)]
        for v in order:
            self.members[self.vmap[v]].append(v)
        self.consistent = True
        adj = [set() for _ in range(self.n)]
        for i, j in constraint_edges(g, spec):
            a, b = self.vmap[i], self.vmap[j]
            if a == b:
                self.consistent = False
                continue
            adj[a].add(b)
            adj[b].add(a)
        self.adj = [sorted(s) for s in adj]
        self.preassign: dict[int, int] = {}
        for v, c in spec.preassign:
            r = self.vmap[v]
            if self.preassign.get(r, c) != c:
                self.consistent = False
            self.preassign[r] = c

    def expand(self, colors: Sequence[int]) -> list[int]:
        return [colors[r] for r in self.vmap]


class Search:
    """Mutable search state over a reduced graph."""

    def __init__(self, red: _Reduced):
        self.red = red
        self.adj = red.adj
        self.n = red.n
        self.avail = [FULL] * self.n
        self.color = [0] * self.n
        self.trail: list[tuple[int, int, int]] = []
        self.decisions: set[int] = set()
        self.nodes = 0
        self.used = [0] * (K + 1)

    def assign(self, v: int, c: int) -> bool:
        """Colour ``v`` with ``c`` and propagate; False on contradiction."""
        avail, color, adj, trail = self.avail, self.color, self.adj, self.trail
        if not avail[v] & BIT[c]:
            return False
        if color[v]:
            return color[v] == c
        stack = [(v, c)]
        while stack:
            v, c = stack.pop()
            if color[v]:
                if color[v] != c:
                    return False
                continue
            trail.append((v, avail[v], 0))
            color[v] = c
            self.used[c] += 1
            avail[v] = BIT[c]
            bit = BIT[c]
            for u in adj[v]:
                m = avail[u]
                if not m & bit:
                    continue
                m ^= bit
                trail.append((u, avail[u], color[u]))
                avail[u] = m
                if not m:
                    return False
                if not color[u] and m in SINGLE:
                    stack.append((u, SINGLE[m]))
        return True

    def mark(self) -> int:
        return len(self.trail)

    def undo(self, mark: int) -> None:
        avail, color, trail, used = self.avail, self.color, self.trail, self.used
        while len(trail) > mark:
            v, m, c = trail.pop()
            if color[v] != c:
                used[color[v]] -= 1
            avail[v] = m
            color[v] = c

    def seed(self) -> bool:
        for r, c in sorted(self.red.preassign.items()):
            if not self.assign(r, c):
                return False
        return True


def _prepare(g: UnitDistanceGraph, spec: ConstraintSpec,
             order: Sequence[int] | None = None) -> Optional[Search]:
    red = _Reduced(g, spec, order)
    if not red.consistent:
        return None
    st = Search(red)
    if not st.seed():
        return None
    return st


def _dfs(st: Search, v: int, canonical: bool, top: int,
         on_leaf: Callable[[], bool]) -> bool:
    """Depth-first search from reduced vertex ``v``. Returns True to stop."""
    n = st.n
    color, avail = st.color, st.avail
    while v < n and color[v]:
        c = color[v]
        if canonical:
            if c > top + 1:
                return False
            top = max(top, c)
        v += 1
    if v == n:
        return on_leaf()
    st.nodes += 1
    st.decisions.add(v)
    for c in MASK_COLORS[avail[v]]:
        if canonical and c > top + 1:
            break
        mark = st.mark()
        if st.assign(v, c):
            if _dfs(st, v + 1, canonical, max(top, c) if canonical else top, on_leaf):
                st.undo(mark)
                return True
        st.undo(mark)
    return False


def _dfs_dynamic(st: Search, symmetric: bool, on_leaf: Callable[[], bool]) -> bool:
    """DFS branching on the uncoloured vertex with the fewest available colours.

    With ``symmetric`` only one colour not yet used anywhere is tried: unused
    colours are still available at every uncoloured vertex, so they are
    interchangeable.
    """
    color, avail, used = st.color, st.avail, st.used
    best, best_k = -1, K + 1
    for v in range(st.n):
        if not color[v]:
            k = POPCOUNT[avail[v]]
            if k < best_k:
                best, best_k = v, k
                if k <= 2:
                    break
    if best < 0:
        return on_leaf()
    v = best
    st.nodes += 1
    st.decisions.add(v)
    fresh_tried = False
    for c in MASK_COLORS[avail[v]]:
        if symmetric and not used[c]:
            if fresh_tried:
                continue
            fresh_tried = True
        mark = st.mark()
        if st.assign(v, c):
            if _dfs_dynamic(st, symmetric, on_leaf):
                st.undo(mark)
                return True
        st.undo(mark)
    return False


def _components(st: Search, verts: Iterable[int]) -> list[list[int]]:
    """Connected pieces of the subgraph induced on the uncoloured ``verts``."""
    color, adj = st.color, st.adj
    todo = {v for v in verts if not color[v]}
    out = []
    for v in sorted(todo):
        if v not in todo:
            continue
        todo.discard(v)
        comp, stack = [v], [v]
        while stack:
            w = stack.pop()
            for u in adj[w]:
                if u in todo:
                    todo.discard(u)
                    comp.append(u)
                    stack.append(u)
        out.append(sorted(comp))
    return out


def _sat_split(st: Search, comp: list[int], symmetric: bool) -> bool:
    """Satisfiability of one component, splitting off independent pieces.

    Leaves the successful assignment in place.
    """
    color, avail, used = st.color, st.avail, st.used
    v = next((u for u in comp if not color[u]), None)
    if v is None:
        return True
    st.nodes += 1
    st.decisions.add(v)
    fresh_tried = False
    for c in MASK_COLORS[avail[v]]:
        if symmetric and not used[c]:
            if fresh_tried:
                continue
            fresh_tried = True
        mark = st.mark()
        if st.assign(v, c):
            if all(_sat_split(st, sub, symmetric) for sub in _components(st, comp)):
                return True
        st.undo(mark)
    return False


def _run(st: Search, canonical: bool, order, on_leaf, split: bool = False) -> None:
    if split:
        if all(_sat_split(st, comp, canonical) for comp in _components(st, range(st.n))):
            on_leaf()
        return
    if order == "graph" or not isinstance(order, str):
        _dfs(st, 0, canonical, 0, on_leaf)
    elif order == "dynamic":
        _dfs_dynamic(st, canonical, on_leaf)
    else:
        raise ValueError(f"unknown vertex order {order!r}")


def _with_recursion(depth: int):
    need = 4 * depth + 1000
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def solve(g: UnitDistanceGraph, spec: ConstraintSpec = ConstraintSpec(),
          stats: dict | None = None, order="graph", split: bool = False) -> Optional[Coloring]:
    """A complete proper colouring satisfying ``spec``, or None.

    ``order`` is ``"graph"`` (branch in vertex order), ``"dynamic"`` (most
    constrained vertex first) or an explicit vertex permutation. With
    ``split`` the uncoloured part is broken into connected components that are
    solved independently. ``stats`` (if given) receives the node count and the
    vertices that were ever branched on.
    """
    st = _prepare(g, spec, None if isinstance(order, str) else order)
    if st is None:
        if stats is not None:
            stats.update(nodes=0, decisions=[])
        return None
    _with_recursion(st.n)
    found: list[list[int]] = []

    def leaf():
        found.append(list(st.color))
        return True

    # colour permutations preserve every constraint unless colours are pinned
    symmetric = not spec.preassign
    _run(st, symmetric, order, leaf, split)
    if stats is not None:
        stats.update(nodes=st.nodes,
                     decisions=sorted(m for r in st.decisions for m in st.red.members[r]))
    if not found:
        return None
    return Coloring(st.red.expand(found[0]))


def enumerate_colorings(g: UnitDistanceGraph, spec: ConstraintSpec = ConstraintSpec(),
                        visitor: Callable[[list[int]], object] | None = None,
                        canonical: bool = True, limit: int | None = None,
                        order="graph") -> int:
    """Visit every proper colouring (one per colour-permutation class when
    ``canonical``), returning the count.

    Canonical colourings are those whose colours first appear in increasing
    order along the vertex ordering (equality groups count at their first
    member). ``visitor`` receives the expanded colour list and may return True
    to stop early; ``limit`` caps the number visited.
    """
    st = _prepare(g, spec, None if isinstance(order, str) else order)
    if st is None:
        return 0
    _with_recursion(st.n)
    count = 0

    def leaf():
        nonlocal count
        count += 1
        stop = False
        if visitor is not None:
            stop = bool(visitor(st.red.expand(st.color)))
        return stop or (limit is not None and count >= limit)

    _run(st, canonical, order, leaf)
    return count


def enumerate_canonical(g, spec=ConstraintSpec(), visitor=None, limit=None, order="graph") -> int:
    return enumerate_colorings(g, spec, visitor, canonical=True, limit=limit, order=order)


def count_parallel(g: UnitDistanceGraph, spec: ConstraintSpec, workers: int,
                   canonical: bool = True, split_depth: int = 3) -> int:
    """Canonical/raw count with the top decision levels fanned out to processes."""
    if workers <= 1:
        return enumerate_colorings(g, spec, canonical=canonical)
    prefixes = _prefixes(g, spec, canonical, split_depth)
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_from_prefix,
                            [(g, spec, canonical, p) for p in prefixes]))


def _prefixes(g, spec, canonical, depth) -> list[tuple]:
    st = _prepare(g, spec)
    if st is None:
        return []
    out = []

    def rec(v, top, chosen, d):
        while v < st.n and st.color[v]:
            if canonical and st.color[v] > top + 1:
                return
            top = max(top, st.color[v])
            v += 1
        if d == depth or v == st.n:
            out.append(tuple(chosen))
            return
        for c in MASK_COLORS[st.avail[v]]:
            if canonical and c > top + 1:
                break
            mark = st.mark()
            if st.assign(v, c):
                rec(v + 1, max(top, c), chosen + [(v, c)], d + 1)
            st.undo(mark)

    rec(0, 0, [], 0)
    return out


def _count_from_prefix(args) -> int:
    g, spec, canonical, prefix = args
    st = _prepare(g, spec)
    _with_recursion(st.n)
    for v, c in prefix:
        if not st.assign(v, c):
            return 0
    count = 0

    def leaf():
        nonlocal count
        count += 1
        return False

    # replaying the prefix keeps the canonical invariant for vertices < start
    start = prefix[-1][0] + 1 if prefix else 0
    top = max((st.color[v] for v in range(start)), default=0)
    _dfs(st, start, canonical, top, leaf)
    return count


def brute_force(n: int, edges: Iterable[tuple[int, int]], canonical: bool = False) -> list[tuple[int, ...]]:
    """Every proper 4-colouring by plain enumeration of all 4**n assignments."""
    edges = list(edges)
    out = []
    for cols in product(range(1, K + 1), repeat=n):
        if all(cols[i] != cols[j] for i, j in edges):
            if canonical and not is_canonical(cols):
                continue
            out.append(cols)
    return out


def is_canonical(colors: Sequence[int]) -> bool:
    top = 0
    for c in colors:
        if c > top + 1:
            return False
        top = max(top, c)
    return True


def canonical_form(colors: Sequence[int]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(c, len(relabel) + 1) for c in colors)


def permutations_of_class(colors: Sequence[int]) -> int:
    """Number of distinct colourings obtained by permuting the 4 colours."""
    used = len(set(colors))
    out = 1
    for i in range(used):
        out *= K - i
    return out
