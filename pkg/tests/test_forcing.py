import pytest

from planechrome import data
from planechrome.field import ONE
from planechrome.forcing import (
    ColoredGraph,
    ReplayError,
    eliminate_all,
    find_forced_centers,
    replay,
    run_chain,
)
from planechrome.geometry import dist2, point_from_abcd, points_from_abcd
from planechrome.graphs import catalog


@pytest.fixture(scope="module")
def g51():
    return catalog("g51")


@pytest.fixture(scope="module")
def hardest():
    colors = [0] * 51
    for c, members in data.HARDEST_COLOR_CLASSES.items():
        for v in members:
            colors[v - 1] = c
    return colors


def test_hardest_coloring_is_proper_and_restricted(g51, hardest):
    assert all(hardest[i] != hardest[j] for i, j in g51.unit_edges)
    assert hardest[0] == hardest[1] == hardest[2]


def test_candidates_include_first_listed_vertex(g51, hardest):
    cg = ColoredGraph(g51.points, hardest, g51.unit_edges)
    centers = [s.center for s in find_forced_centers(cg, tie_break="sort_key")]
    assert point_from_abcd(6, 0, -24, -6) in centers
    assert centers == sorted(centers, key=lambda p: p.sort_key())


@pytest.mark.parametrize("rule", ["sort_key", "age", "nearest", "lookahead"])
def test_screened_candidates_equal_exhaustive(g51, hardest, rule):
    cg = ColoredGraph(g51.points, hardest, g51.unit_edges)
    fast = cg.forced_centers(tie_break=rule)
    slow = cg.forced_centers(exact=True, tie_break=rule)
    assert fast == slow
    for st in fast:
        assert all(dist2(cg.points[v], st.center) == ONE for v in st.triple)
        assert st.forced_color not in {cg.colors[v] for v in st.triple}


def test_replay_of_listed_vertices(g51, hardest):
    adds = points_from_abcd(data.HARDEST_ADDITIONS_ABCD)
    trace = replay(g51.points, hardest, adds, g51.unit_edges)
    assert len(trace.steps) == 55
    assert trace.outcome == "Conflict"
    assert trace.certify()
    # the original colouring is never touched
    assert trace.colors[:51] == hardest


def test_replay_rejects_off_center_point(g51, hardest):
    adds = points_from_abcd(data.HARDEST_ADDITIONS_ABCD[:3])
    adds.insert(1, point_from_abcd(1, 1, 1, 1))
    with pytest.raises(ReplayError) as err:
        replay(g51.points, hardest, adds, g51.unit_edges)
    assert err.value.step == 2


def test_replay_empty_additions(g51, hardest):
    trace = replay(g51.points, hardest, [], g51.unit_edges)
    assert trace.outcome == "Stuck" and not trace.steps


def test_run_chain_on_hardest_coloring(g51, hardest):
    trace = run_chain(g51.points, hardest, 500, g51.unit_edges)
    assert trace.outcome == "Conflict"
    assert trace.certify()
    assert trace.colors[:51] == hardest
    again = run_chain(g51.points, hardest, 500, g51.unit_edges)
    assert again.additions == trace.additions


def test_limit_reached(g51, hardest):
    trace = run_chain(g51.points, hardest, 2, g51.unit_edges)
    assert trace.outcome == "LimitReached" and len(trace.steps) == 2


def test_trivial_cases():
    a, b = point_from_abcd(0, 0, 0, 0), point_from_abcd(0, 0, 36, 0)
    with pytest.raises(ValueError):
        run_chain([a, b], [1, 1])
    assert run_chain([], []).outcome == "Stuck"
    mono = ColoredGraph(points_from_abcd(data.G51_ABCD[:10]), [1] * 10)
    assert mono.forced_centers() == []


def test_radius_filter():
    # an equilateral triangle of side 1 has circumradius² = 1/3
    pts = points_from_abcd([(0, 0, 0, 0), (0, 0, 36, 0), (18, 0, 18, 0)])
    assert dist2(pts[0], pts[2]) == ONE
    cg = ColoredGraph(pts, [1, 2, 3])
    assert cg.forced_centers() == []


def test_single_forced_center():
    # three points on the unit circle around the origin
    pts = points_from_abcd([(0, 0, 36, 0), (0, 0, -36, 0), (18, 0, 18, 0)])
    assert all(dist2(p, point_from_abcd(0, 0, 0, 0)) == ONE for p in pts)
    steps = ColoredGraph(pts, [1, 2, 3]).forced_centers()
    assert [s.center for s in steps] == [point_from_abcd(0, 0, 0, 0)]
    assert steps[0].forced_color == 4


def test_eliminate_all_smoke(g51):
    from planechrome.coloring import ConstraintSpec, enumerate_canonical

    cols = []
    enumerate_canonical(g51, ConstraintSpec.abc_equal(g51), visitor=cols.append, limit=12)
    summary = eliminate_all(g51.points, cols, 500, g51.unit_edges)
    assert summary.total == 12 and summary.success
    assert summary.as_dict()["union_size"] == len(summary.union)
    par = eliminate_all(g51.points, cols, 500, g51.unit_edges, workers=2)
    assert par.outcomes == summary.outcomes and par.union == summary.union
    assert 0 <= summary.fraction_within(3) <= 1
