import random
from itertools import combinations

import pytest

from planechrome.coloring import (
    Coloring,
    ConstraintSpec,
    brute_force,
    canonical_form,
    count_parallel,
    enumerate_colorings,
    is_canonical,
    permutations_of_class,
    solve,
    violations,
)
from planechrome.geometry import point_from_abcd
from planechrome.graphs import UnitDistanceGraph, catalog


def make(n, edges, aux=()):
    # coordinates are irrelevant to the search
    pts = tuple(point_from_abcd(i, 0, 0, 0) for i in range(n))
    return UnitDistanceGraph(pts, tuple(edges), tuple(aux), {}, "t")


def complete(n):
    return list(combinations(range(n), 2))


NAMED = {
    "K2": make(2, complete(2)),
    "K3": make(3, complete(3)),
    "K4": make(4, complete(4)),
    "K5": make(5, complete(5)),
    "C5": make(5, [(i, (i + 1) % 5) for i in range(5)]),
}


def random_graphs(count=40, seed=7):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 8)
        p = rng.choice([0.2, 0.4, 0.6, 0.8])
        yield make(n, [e for e in complete(n) if rng.random() < p])


def spec_edges(g, spec):
    return list(g.unit_edges) + (list(g.aux_edges) if spec.aux else []) + list(spec.different)


def oracle(g, spec=ConstraintSpec(), canonical=False):
    out = []
    for cols in brute_force(g.n, spec_edges(g, spec)):
        if any(len({cols[v] for v in grp}) > 1 for grp in spec.equal_groups):
            continue
        if any(cols[v] != c for v, c in spec.preassign):
            continue
        out.append(cols)
    if canonical:
        out = sorted({canonical_form(c) for c in out})
    return out


@pytest.mark.parametrize("name", sorted(NAMED))
def test_named_graphs(name):
    g = NAMED[name]
    want = oracle(g, canonical=True)
    got = []
    assert enumerate_colorings(g, visitor=lambda c: got.append(tuple(c))) == len(want)
    assert sorted(got) == want
    assert (solve(g) is None) == (not want)


def test_k2_has_one_class():
    assert enumerate_colorings(NAMED["K2"]) == 1


@pytest.mark.parametrize("g", list(random_graphs()), ids=lambda g: f"n{g.n}e{len(g.unit_edges)}")
def test_random_graphs_against_brute_force(g):
    raw = oracle(g)
    canon = oracle(g, canonical=True)
    seen = []
    assert enumerate_colorings(g, visitor=lambda c: seen.append(tuple(c))) == len(canon)
    # no two visited colourings are colour permutations of each other
    assert len({canonical_form(c) for c in seen}) == len(seen)
    assert all(is_canonical(c) for c in seen)
    assert sum(permutations_of_class(c) for c in seen) == len(raw)
    assert enumerate_colorings(g, canonical=False) == len(raw)
    for order in ("graph", "dynamic", list(reversed(range(g.n)))):
        for split in (False, True):
            col = solve(g, order=order, split=split)
            assert (col is None) == (not raw)
            if col is not None:
                assert violations(g, ConstraintSpec(), col.colors) == []


def test_constraints_against_brute_force():
    rng = random.Random(11)
    for g in random_graphs(30, seed=3):
        if g.n < 3:
            continue
        a, b, c = rng.sample(range(g.n), 3)
        specs = [
            ConstraintSpec(equal_groups=((a, b),)),
            ConstraintSpec(different=((a, c),)),
            ConstraintSpec(preassign=((a, 2), (b, 3))),
            ConstraintSpec(equal_groups=((a, b, c),), different=((a, b),)),
        ]
        for spec in specs:
            raw = oracle(g, spec)
            assert enumerate_colorings(g, spec, canonical=False) == len(raw)
            col = solve(g, spec)
            assert (col is None) == (not raw)
            if col is not None:
                assert violations(g, spec, col.colors) == []
            if not spec.preassign:
                assert enumerate_colorings(g, spec) == len({canonical_form(c) for c in raw})


def test_aux_edges_are_constraints():
    g = make(3, [(0, 1)], aux=[(1, 2), (0, 2)])
    assert enumerate_colorings(g, ConstraintSpec(aux=True), canonical=False) == 24
    assert enumerate_colorings(g, canonical=False) == 4 * 3 * 4


def test_inconsistent_spec_is_unsat_not_error():
    g = NAMED["K2"]
    assert solve(g, ConstraintSpec(preassign=((0, 1), (1, 1)))) is None
    assert solve(g, ConstraintSpec(equal_groups=((0, 1),))) is None
    assert enumerate_colorings(g, ConstraintSpec(equal_groups=((0, 1),))) == 0


def test_limit_and_early_stop():
    g = make(6, [])
    assert enumerate_colorings(g, limit=5) == 5
    assert enumerate_colorings(g, visitor=lambda c: True) == 1


def test_parallel_count_matches_serial():
    g = catalog("g49")
    assert count_parallel(g, ConstraintSpec(), workers=2) == 18694


def test_coloring_file_round_trip():
    c = Coloring([1, 2, 3, 4, 1])
    assert Coloring.parse(c.format(), 5).colors == c.colors
    with pytest.raises(ValueError):
        Coloring.parse("0 5\n", 5)
    with pytest.raises(ValueError):
        Coloring.parse("0\n", 5)


def test_claim1_instances_unsat():
    g40 = catalog("g40")
    spec = ConstraintSpec(aux=True, different=((g40.specials["v1"], g40.specials["v2"]),))
    assert solve(g40, spec) is None
    # without the disequality the graph is colourable and the pair agrees
    col = solve(g40, ConstraintSpec(aux=True))
    assert col is not None
    assert col.colors[g40.specials["v1"]] == col.colors[g40.specials["v2"]]
    assert solve(catalog("g79"), ConstraintSpec(aux=True), split=True) is None


def test_mutated_g79_witness_checks_out():
    g = catalog("g79")
    rng = random.Random(5)
    drop = rng.randrange(len(g.aux_edges))
    aux = g.aux_edges[:drop] + g.aux_edges[drop + 1:]
    h = UnitDistanceGraph(g.points, g.unit_edges, aux, g.specials, "g79-mut")
    col = solve(h, ConstraintSpec(aux=True), split=True)
    if col is not None:
        assert violations(h, ConstraintSpec(aux=True), col.colors) == []


def test_g627_restricted_unsat_and_forced_tail():
    g = catalog("g627")
    stats = {}
    assert solve(g, ConstraintSpec.abc_equal(g), stats) is None
    assert stats["nodes"] > 0
    assert max(stats["decisions"], default=0) < 51
