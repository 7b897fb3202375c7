"""Exact lattice-plane primitives.

Points with integer coordinates, their parity colors, doubled signed areas,
convexity validation, and boundary words.  All arithmetic is Python integer
arithmetic, hence exact at every size; "doubled area" always means the raw
orientation determinant, i.e. twice the usual signed area, so that every
quantity handled by the package is an integer.  A lattice triangle has
integer area exactly when its doubled area is even, and area 1 exactly when
its doubled area is 2.
"""

from __future__ import annotations

import enum
import functools
import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import NotStrictlyConvex, RepeatedVertex, TooFewVertices
from .words import CyclicWord


class LatticePoint(NamedTuple):
    x: int
    y: int

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.x - other.x, self.y - other.y)

    def cross(self, other: "LatticePoint") -> int:
        return self.x * other.y - self.y * other.x

    def dot(self, other: "LatticePoint") -> int:
        return self.x * other.x + self.y * other.y


class Color(enum.Enum):
    """Parity class of a lattice point: (x mod 2, y mod 2)."""

    A = (0, 0)
    B = (1, 0)
    C = (1, 1)
    D = (0, 1)

    @property
    def tag(self) -> str:
        return self.name


_COLOR_BY_PARITY = {c.value: c for c in Color}


class LatticeTriangle(NamedTuple):
    v0: LatticePoint
    v1: LatticePoint
    v2: LatticePoint


def as_point(p) -> LatticePoint:
    """Coerce an (x, y) pair of exact integers to a LatticePoint."""
    x, y = p
    if isinstance(x, bool) or isinstance(y, bool) or not isinstance(x, int) or not isinstance(y, int):
        raise ValueError(f"lattice point coordinates must be integers, got {p!r}")
    return LatticePoint(x, y)


def as_triangle(t) -> LatticeTriangle:
    a, b, c = t
    return LatticeTriangle(as_point(a), as_point(b), as_point(c))


def color_of(p: LatticePoint) -> Color:
    """Parity color of a lattice point."""
    return _COLOR_BY_PARITY[(p[0] % 2, p[1] % 2)]


def signed_area2(t: LatticeTriangle) -> int:
    """Twice the signed area of a triangle.

    Positive iff the vertices run counterclockwise, zero iff they are
    collinear.  Exact for arbitrarily large coordinates.
    """
    (x1, y1), (x2, y2), (x3, y3) = t
    return (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)


def orient(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> int:
    """Doubled signed area of the point triple (a, b, c)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])


def has_repeated_color(t: LatticeTriangle) -> bool:
    """True iff at least two vertices of the triangle share a parity color."""
    c0, c1, c2 = (color_of(v) for v in t)
    return c0 == c1 or c1 == c2 or c0 == c2


def is_integer_area(t: LatticeTriangle) -> bool:
    """True iff the triangle's (unsigned) area is an integer.

    Equivalent to signed_area2(t) being even, and — the parity fact the whole
    package rests on — to the triangle having two vertices of the same color.
    """
    return signed_area2(t) % 2 == 0


def collinear(p: LatticePoint, q: LatticePoint, r: LatticePoint) -> bool:
    return orient(p, q, r) == 0


@dataclass(frozen=True)
class ConvexLatticePolygon:
    """A strictly convex lattice polygon, vertices in counterclockwise order.

    Construct through validate_convex; the constructor itself does not check.
    """

    vertices: tuple[LatticePoint, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[LatticePoint, LatticePoint]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def _direction_half(v: LatticePoint) -> int:
    # 0 for the upper half-plane (including the positive x-axis),
    # 1 for the lower half (including the negative x-axis).
    if v[1] > 0 or (v[1] == 0 and v[0] > 0):
        return 0
    return 1


@functools.total_ordering
class _AngleKey:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __eq__(self, other):
        a, b = self.v, other.v
        return _direction_half(a) == _direction_half(b) and a[0] * b[1] - a[1] * b[0] == 0

    def __lt__(self, other):
        a, b = self.v, other.v
        ha, hb = _direction_half(a), _direction_half(b)
        if ha != hb:
            return ha < hb
        return a[0] * b[1] - a[1] * b[0] > 0


def angle_key(v: LatticePoint) -> _AngleKey:
    """Sort key ordering nonzero integer vectors by angle from the +x axis.

    Exact: vectors compare by half-plane first, then by cross product within
    a half.  Equal directions compare equal (ties broken by callers).
    """
    return _AngleKey(v)


def validate_convex(points: Iterable) -> ConvexLatticePolygon:
    """Validate a vertex list as a strictly convex lattice polygon.

    Clockwise input is reversed to counterclockwise.  Raises TooFewVertices,
    RepeatedVertex, or NotStrictlyConvex (collinear consecutive triples,
    reflex corners, and self-winding cycles all count as non-convex).
    """
    vs = [as_point(p) for p in points]
    if len(vs) < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {len(vs)}")
    if len(set(vs)) != len(vs):
        seen = set()
        for p in vs:
            if p in seen:
                raise RepeatedVertex(f"vertex {tuple(p)} appears more than once")
            seen.add(p)
    n = len(vs)
    crosses = [orient(vs[i], vs[(i + 1) % n], vs[(i + 2) % n]) for i in range(n)]
    if any(c == 0 for c in crosses):
        i = crosses.index(0)
        raise NotStrictlyConvex(
            f"vertices {tuple(vs[i])}, {tuple(vs[(i + 1) % n])}, {tuple(vs[(i + 2) % n])} are collinear"
        )
    if all(c < 0 for c in crosses):
        vs.reverse()
    elif not all(c > 0 for c in crosses):
        raise NotStrictlyConvex("mixed turn directions: polygon is not convex")
    # All turns are now left turns; still reject cycles that wind around
    # more than once (e.g. pentagrams), which are self-intersecting.
    edges = [vs[(i + 1) % n] - vs[i] for i in range(n)]
    keys = [angle_key(e) for e in edges]
    wraps = sum(1 for i in range(n) if keys[(i + 1) % n] < keys[i])
    if wraps != 1:
        raise NotStrictlyConvex("edge directions wind around more than once")
    return ConvexLatticePolygon(tuple(vs))


def polygon_area2(P: ConvexLatticePolygon) -> int:
    """Twice the polygon's area (shoelace sum); positive for valid input."""
    vs = P.vertices
    n = len(vs)
    return sum(vs[i][0] * vs[(i + 1) % n][1] - vs[(i + 1) % n][0] * vs[i][1] for i in range(n))


def boundary_word(P: ConvexLatticePolygon) -> CyclicWord:
    """Cyclic word of corner parity colors, counterclockwise."""
    return CyclicWord(tuple(color_of(v).tag for v in P.vertices))


def contains_point(P: ConvexLatticePolygon, p: LatticePoint) -> bool:
    """True iff p lies inside or on the boundary of P (CCW convex P)."""
    vs = P.vertices
    n = len(vs)
    return all(orient(vs[i], vs[(i + 1) % n], p) >= 0 for i in range(n))


# --- polygon file format ----------------------------------------------------

def parse_polygon_json(text: str) -> ConvexLatticePolygon:
    """Parse the polygon text format: a JSON array of [x, y] integer pairs."""
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("polygon JSON must be an array of [x, y] pairs")
    pts = []
    for item in data:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ValueError(f"polygon entry {item!r} is not an [x, y] pair")
        pts.append(as_point(item))
    return validate_convex(pts)


def polygon_to_json(P: ConvexLatticePolygon) -> str:
    return json.dumps([[v.x, v.y] for v in P.vertices])
