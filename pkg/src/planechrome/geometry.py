"""Exact planar geometry over the coordinate field.

Points use the integer encoding ``[a, b, c, d]`` for
``(a√3/36 + b√11/36, c/36 + d√33/36)`` whenever the data comes from the
published vertex lists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .field import ONE, SQRT3, ZERO, FieldElement, as_element


@dataclass(frozen=True, eq=False)
class Point:
    x: FieldElement
    y: FieldElement
    provenance: Optional[tuple[int, int, int, int]] = field(default=None, compare=False)

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def sort_key(self) -> tuple:
        return (self.x.sort_key(), self.y.sort_key())

    def to_float(self) -> tuple[float, float]:
        return float(self.x), float(self.y)

    def abcd(self) -> Optional[tuple[int, int, int, int]]:
        """Recover the ``[a,b,c,d]`` encoding if the coordinates admit one."""
        if self.provenance is not None:
            return self.provenance
        x, y = self.x.coeffs, self.y.coeffs
        if any(x[i] for i in (0, 3, 4, 5, 6, 7)) or any(y[i] for i in (1, 2, 4, 5, 6, 7)):
            return None
        vals = [x[1] * 36, x[2] * 36, y[0] * 36, y[3] * 36]
        if any(v.denominator != 1 for v in vals):
            return None
        return tuple(int(v) for v in vals)

    def __repr__(self):
        enc = self.abcd()
        if enc is not None:
            return "[{}, {}, {}, {}]".format(*enc)
        return f"Point({self.x}, {self.y})"


ORIGIN = Point(ZERO, ZERO)


def point_from_abcd(a: int, b: int, c: int, d: int) -> Point:
    x = FieldElement._raw((0, a, b, 0, 0, 0, 0, 0), 36)
    y = FieldElement._raw((c, 0, 0, d, 0, 0, 0, 0), 36)
    return Point(x, y, (a, b, c, d))


def points_from_abcd(rows: Iterable[Sequence[int]]) -> list[Point]:
    return [point_from_abcd(*row) for row in rows]


def dist2(p: Point, q: Point) -> FieldElement:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def circumcircle(p1: Point, p2: Point, p3: Point) -> Optional[tuple[Point, FieldElement]]:
    """Centre and squared radius of the circle through three points.

    Returns None for collinear or coincident input. Solves the two
    perpendicular-bisector equations by Cramer's rule, relative to ``p1``.
    """
    bx, by = p2.x - p1.x, p2.y - p1.y
    cx, cy = p3.x - p1.x, p3.y - p1.y
    det = (bx * cy - by * cx) * 2
    if det.is_zero():
        return None
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    inv = det.inverse()
    ux = (cy * b2 - by * c2) * inv
    uy = (bx * c2 - cx * b2) * inv
    return Point(p1.x + ux, p1.y + uy), ux * ux + uy * uy


@dataclass(frozen=True)
class Isometry:
    """``p -> L p + t`` with ``L = [[a, b], [c, d]]`` exactly orthogonal."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement
    translation: Point = ORIGIN

    def __post_init__(self):
        if not self.is_orthogonal():
            raise ValueError("linear part of an isometry must be orthogonal")

    def is_orthogonal(self) -> bool:
        a, b, c, d = self.a, self.b, self.c, self.d
        return a * a + c * c == ONE and b * b + d * d == ONE and (a * b + c * d).is_zero()

    def determinant(self) -> FieldElement:
        return self.a * self.d - self.b * self.c

    def is_rotation(self) -> bool:
        return self.determinant() == ONE

    def __call__(self, p: Point) -> Point:
        return apply(self, p)

    def compose(self, other: "Isometry") -> "Isometry":
        """``self ∘ other``."""
        a = self.a * other.a + self.b * other.c
        b = self.a * other.b + self.b * other.d
        c = self.c * other.a + self.d * other.c
        d = self.c * other.b + self.d * other.d
        return Isometry(a, b, c, d, apply(self, other.translation))

    def key(self) -> tuple:
        return (self.a, self.b, self.c, self.d, self.translation)


def apply(iso: Isometry, p: Point) -> Point:
    t = iso.translation
    return Point(iso.a * p.x + iso.b * p.y + t.x, iso.c * p.x + iso.d * p.y + t.y)


IDENTITY = Isometry(ONE, ZERO, ZERO, ONE)


def rotation(cos: FieldElement, sin: FieldElement, center: Point = ORIGIN) -> Isometry:
    cos, sin = as_element(cos), as_element(sin)
    lin = Isometry(cos, -sin, sin, cos)
    # fix the centre: t = c - L c
    moved = apply(lin, center)
    return Isometry(cos, -sin, sin, cos, center - moved)


def reflection_x_axis() -> Isometry:
    """Mirror across the line y = 0."""
    return Isometry(ONE, ZERO, ZERO, -ONE)


def reflection_y_axis() -> Isometry:
    """Mirror across the line x = 0."""
    return Isometry(-ONE, ZERO, ZERO, ONE)


# cos(2π/3), sin(2π/3)
ROT120 = rotation(Fraction(-1, 2), SQRT3 * Fraction(1, 2))

# The rotation that carries [0,0,96,0] to unit distance from itself.
G79_COS = Fraction(119, 128)
G79_SIN = FieldElement.sqrt(247, Fraction(3, 128))
G79_ROTATION = rotation(G79_COS, G79_SIN)


def dihedral_group(mirror: Isometry | None = None) -> list[Isometry]:
    """The six elements generated by ROT120 and one mirror through the origin.

    The default mirror is the y-axis (x = 0), which is the symmetry of the
    marked triangle [0,0,12,0], [-6,0,-6,0], [6,0,-6,0].
    """
    mirror = mirror or reflection_y_axis()
    rots = [IDENTITY, ROT120, ROT120.compose(ROT120)]
    group = rots + [r.compose(mirror) for r in rots]
    keys = {g.key() for g in group}
    if len(keys) != 6:
        raise AssertionError("dihedral generators do not produce six distinct elements")
    return group


def mirror_line_normal(iso: Isometry) -> Point:
    """A normal vector (nx, ny) of the mirror line of a reflection through the origin.

    For a reflection ``L = I - 2 n nᵀ / |n|²``, ``I - L`` has columns parallel to n.
    """
    if iso.is_rotation():
        raise ValueError("not a reflection")
    col0 = Point(ONE - iso.a, -iso.c)
    if not (col0.x.is_zero() and col0.y.is_zero()):
        return col0
    return Point(-iso.b, ONE - iso.d)


def symmetry_orbit(points: Sequence[Point], group: Sequence[Isometry] | None = None) -> list[Point]:
    group = group if group is not None else dihedral_group()
    seen = {}
    for p in points:
        for g in group:
            q = apply(g, p)
            if q not in seen:
                seen[q] = q
    return sorted(seen, key=Point.sort_key)


def align_segments(p: Point, q: Point, p2: Point, q2: Point, flip: bool = False) -> Isometry:
    """The isometry taking p -> p2 and q -> q2 (direct, or reflected when ``flip``)."""
    u = q - p
    v = q2 - p2
    n2 = u.x * u.x + u.y * u.y
    m2 = v.x * v.x + v.y * v.y
    if n2.is_zero() or m2.is_zero():
        raise ValueError("degenerate segment")
    if n2 != m2:
        raise ValueError("segments have different lengths")
    inv = n2.inverse()
    if not flip:
        # rotation taking u to v
        cos = (u.x * v.x + u.y * v.y) * inv
        sin = (u.x * v.y - u.y * v.x) * inv
        a, b, c, d = cos, -sin, sin, cos
    else:
        # reflection R with R u = v: [[cos2, sin2], [sin2, -cos2]]
        cos = (u.x * v.x - u.y * v.y) * inv
        sin = (u.x * v.y + u.y * v.x) * inv
        a, b, c, d = cos, sin, sin, -cos
    lin = Isometry(a, b, c, d)
    return Isometry(a, b, c, d, p2 - apply(lin, p))


@dataclass(frozen=True)
class Triangle:
    vertices: tuple[int, int, int]
    side2: Fraction


def find_equilateral_triangles(points: Sequence[Point], side2) -> list[Triangle]:
    side2 = Fraction(side2)
    target = FieldElement.rational(side2)
    n = len(points)
    near = [set() for _ in range(n)]
    for i, j in combinations(range(n), 2):
        if dist2(points[i], points[j]) == target:
            near[i].add(j)
            near[j].add(i)
    out = []
    for i in range(n):
        for j in sorted(k for k in near[i] if k > i):
            for k in sorted(near[i] & near[j]):
                if k > j:
                    out.append(Triangle((i, j, k), side2))
    return out


# -- point file format ------------------------------------------------------

def format_points(points: Iterable[Point]) -> str:
    lines = []
    for p in points:
        enc = p.abcd()
        if enc is not None:
            lines.append("{} {} {} {}".format(*enc))
        else:
            lines.append(p.x.to_tokens() + " " + p.y.to_tokens())
    return "\n".join(lines) + ("\n" if lines else "")


def parse_points(text: str) -> list[Point]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        try:
            if len(toks) == 4:
                out.append(point_from_abcd(*(int(t) for t in toks)))
            elif len(toks) == 16:
                out.append(Point(FieldElement.from_tokens(toks[:8]), FieldElement.from_tokens(toks[8:])))
            else:
                raise ValueError(f"expected 4 or 16 fields, got {len(toks)}")
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return out


__all__ = [
    "Point", "Isometry", "Triangle", "ORIGIN", "IDENTITY", "ROT120", "G79_ROTATION",
    "point_from_abcd", "points_from_abcd", "dist2", "circumcircle", "apply", "rotation",
    "reflection_x_axis", "reflection_y_axis", "dihedral_group", "mirror_line_normal",
    "symmetry_orbit", "align_segments", "find_equilateral_triangles", "format_points",
    "parse_points",
]
