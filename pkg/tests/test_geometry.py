from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planechrome import data
from planechrome.field import ONE, SQRT3, FieldElement
from planechrome.geometry import (
    IDENTITY,
    G79_ROTATION,
    ROT120,
    Isometry,
    Point,
    align_segments,
    apply,
    circumcircle,
    dihedral_group,
    dist2,
    find_equilateral_triangles,
    format_points,
    parse_points,
    point_from_abcd,
    points_from_abcd,
    reflection_x_axis,
    symmetry_orbit,
)

coord = st.integers(min_value=-60, max_value=60)
abcd = st.tuples(coord, coord, coord, coord).map(lambda t: point_from_abcd(*t))


def test_abcd_encoding():
    p = point_from_abcd(6, 0, -6, 0)
    assert p.x == SQRT3 * Fraction(6, 36)
    assert p.y == Fraction(-1, 6)
    assert p.abcd() == (6, 0, -6, 0)
    assert repr(p) == "[6, 0, -6, 0]"


def test_marked_g40_pair():
    v1, v2 = points_from_abcd(data.G40_ABCD[:2])
    assert dist2(v1, v2) == Fraction(64, 9)


def test_rotation_is_exact():
    assert G79_ROTATION.is_orthogonal() and G79_ROTATION.is_rotation()
    p = point_from_abcd(0, 0, 96, 0)
    assert dist2(p, apply(G79_ROTATION, p)) == ONE


def test_non_orthogonal_rejected():
    two = FieldElement.rational(2)
    zero = FieldElement.rational(0)
    with pytest.raises(ValueError):
        Isometry(two, zero, zero, two)


@settings(max_examples=30, deadline=None)
@given(abcd, abcd)
def test_isometries_preserve_distance(p, q):
    for g in dihedral_group() + [G79_ROTATION, reflection_x_axis()]:
        assert dist2(apply(g, p), apply(g, q)) == dist2(p, q)


@settings(max_examples=20, deadline=None)
@given(abcd, abcd, abcd)
def test_circumcircle_equidistant(a, b, c):
    res = circumcircle(a, b, c)
    if res is None:
        # collinear: the signed area vanishes
        ux, uy = b.x - a.x, b.y - a.y
        vx, vy = c.x - a.x, c.y - a.y
        assert (ux * vy - uy * vx).is_zero()
        return
    o, r2 = res
    assert dist2(o, a) == r2 and dist2(o, b) == r2 and dist2(o, c) == r2


def test_dihedral_group_closed():
    group = dihedral_group()
    keys = {g.key() for g in group}
    assert len(keys) == 6
    for g in group:
        for h in group:
            assert g.compose(h).key() in keys
    assert ROT120.compose(ROT120).compose(ROT120).key() == IDENTITY.key()


def test_orbit_idempotent():
    gens = points_from_abcd(data.APPENDIX_ABCD[:12])
    orbit = symmetry_orbit(gens)
    assert symmetry_orbit(orbit) == orbit
    assert set(gens) <= set(orbit)


@settings(max_examples=20, deadline=None)
@given(abcd, abcd, st.booleans())
def test_align_segments(p, q, flip):
    if p == q:
        return
    g = G79_ROTATION.compose(ROT120)
    p2, q2 = apply(g, p), apply(g, q)
    iso = align_segments(p, q, p2, q2, flip=flip)
    assert apply(iso, p) == p2 and apply(iso, q) == q2
    assert iso.is_rotation() is (not flip)


def test_align_segments_rejects_bad_input():
    p, q = point_from_abcd(0, 0, 0, 0), point_from_abcd(0, 0, 36, 0)
    with pytest.raises(ValueError):
        align_segments(p, p, p, q)
    with pytest.raises(ValueError):
        align_segments(p, q, p, point_from_abcd(0, 0, 72, 0))


def test_equilateral_triangles_of_marked_triangle():
    pts = points_from_abcd(data.G51_ABCD[:3])
    tris = find_equilateral_triangles(pts, Fraction(1, 3))
    assert [t.vertices for t in tris] == [(0, 1, 2)]


def test_point_file_round_trip():
    pts = points_from_abcd(data.G49_ABCD[:5])
    rotated = [apply(G79_ROTATION, p) for p in pts]
    text = "# header\n" + format_points(pts + rotated)
    assert parse_points(text) == pts + rotated


def test_point_file_errors_carry_line_number():
    with pytest.raises(ValueError, match="line 2"):
        parse_points("1 2 3 4\n1 2 3\n")
    with pytest.raises(ValueError, match="line 1"):
        parse_points("a b c d\n")


def test_point_equality_ignores_provenance():
    p = point_from_abcd(12, 0, 0, 0)
    assert Point(p.x, p.y) == p
    assert hash(Point(p.x, p.y)) == hash(p)
