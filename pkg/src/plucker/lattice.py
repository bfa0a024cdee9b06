"""Exact integer lattice geometry: polygons, support sets, mixed volumes.

Everything here works over the integers (areas are stored doubled) so that
no rounding can creep into the combinatorial formulas built on top.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Optional

Point = tuple[int, int]

# The six named covectors: DOWN is the functional -y, NE is x+y, LEFT is -x,
# and UP, SW, RIGHT are their negatives.
DOWN: Point = (0, -1)
NE: Point = (1, 1)
LEFT: Point = (-1, 0)
UP: Point = (0, 1)
SW: Point = (-1, -1)
RIGHT: Point = (1, 0)

LOWER_ARROWS: tuple[Point, ...] = (DOWN, NE, LEFT)
UPPER_ARROWS: tuple[Point, ...] = (UP, SW, RIGHT)
ARROWS: tuple[Point, ...] = LOWER_ARROWS + UPPER_ARROWS


class DegeneratePolygonError(ValueError):
    """Raised when an operation requires a 2-dimensional polygon."""


def cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def primitive(v: Point) -> Point:
    """Divide a nonzero integer vector by the gcd of its coordinates."""
    if v == (0, 0):
        raise ValueError("zero vector has no primitive form")
    g = math.gcd(abs(v[0]), abs(v[1]))
    return (v[0] // g, v[1] // g)


def neg(v: Point) -> Point:
    return (-v[0], -v[1])


def add(p: Point, q: Point) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def rotate_point(p: Point) -> Point:
    """Exponent action of the monomial map x -> 1/y, y -> x/y."""
    a, b = p
    return (b, -a - b)


def _hull_vertices(points: Iterable[Point]) -> tuple[Point, ...]:
    """Andrew's monotone chain; strictly convex CCW vertex cycle."""
    pts = sorted(set(points))
    if len(pts) == 1:
        return (pts[0],)
    if len(pts) == 2:
        return tuple(pts)
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    verts = tuple(lower[:-1] + upper[:-1])
    if len(verts) == 2:
        # all points collinear; keep the two extreme ones
        return verts
    return verts


@dataclass(frozen=True)
class Face:
    """A support set of a polygon: either a vertex or an edge."""

    endpoints: tuple[Point, ...]

    def __post_init__(self) -> None:
        if len(self.endpoints) not in (1, 2):
            raise ValueError("face must have one or two endpoints")

    @property
    def kind(self) -> str:
        return "vertex" if len(self.endpoints) == 1 else "edge"


def lattice_length(face: Face) -> int:
    """Number of lattice points on the face minus one; 0 for a vertex."""
    if face.kind == "vertex":
        return 0
    (x0, y0), (x1, y1) = face.endpoints
    return math.gcd(abs(x1 - x0), abs(y1 - y0))


def segment_length(a: Point, b: Point) -> int:
    return math.gcd(abs(b[0] - a[0]), abs(b[1] - a[1]))


@dataclass(frozen=True)
class LatticePolygon:
    """Convex lattice polygon as a CCW vertex cycle.

    Degenerate cases (a single point, a segment) are representable and
    carry dim 0 or 1; formula-level operations reject them explicitly.
    """

    vertices: tuple[Point, ...]

    @staticmethod
    def hull(points: Iterable[Point]) -> "LatticePolygon":
        pts = list(points)
        if not pts:
            raise ValueError("cannot take the hull of an empty set")
        return LatticePolygon(_hull_vertices(pts))

    @property
    def dim(self) -> int:
        n = len(self.vertices)
        if n == 1:
            return 0
        if n == 2:
            return 1
        return 2

    def require_dim2(self) -> None:
        if self.dim < 2:
            raise DegeneratePolygonError(
                f"operation requires a 2-dimensional polygon, got dim {self.dim}"
            )

    def edges(self) -> list[tuple[Point, Point]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def translate(self, t: Point) -> "LatticePolygon":
        return LatticePolygon(tuple(add(v, t) for v in self.vertices))

    def canonical(self) -> "LatticePolygon":
        """Translate so the lexicographically minimal vertex sits at the origin."""
        m = min(self.vertices)
        return self.translate((-m[0], -m[1]))

    def bounding_box(self) -> tuple[Point, Point]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return (min(xs), min(ys)), (max(xs), max(ys))

    def contains_point(self, p: Point) -> bool:
        verts = self.vertices
        if len(verts) == 1:
            return p == verts[0]
        if len(verts) == 2:
            a, b = verts
            if cross(a, b, p) != 0:
                return False
            lo = (min(a[0], b[0]), min(a[1], b[1]))
            hi = (max(a[0], b[0]), max(a[1], b[1]))
            return lo[0] <= p[0] <= hi[0] and lo[1] <= p[1] <= hi[1]
        return all(cross(a, b, p) >= 0 for a, b in self.edges())

    def __contains__(self, p: Point) -> bool:
        return self.contains_point(p)


Diagram = frozenset  # finite set of lattice points (a Newton diagram)


def convex_hull(points: Iterable[Point]) -> LatticePolygon:
    return LatticePolygon.hull(points)


def support_set(P: LatticePolygon, g: Point) -> Face:
    """The vertex or edge of P on which the functional g is maximal."""
    u, v = g
    best = max(u * x + v * y for x, y in P.vertices)
    winners = [p for p in P.vertices if u * p[0] + v * p[1] == best]
    if len(winners) == 1:
        return Face((winners[0],))
    if len(winners) == 2:
        return Face(tuple(winners))
    raise AssertionError("strictly convex polygon cannot have 3 collinear maximizers")


def support_length(P: LatticePolygon, g: Point) -> int:
    return lattice_length(support_set(P, g))


def doubled_area(P: LatticePolygon) -> int:
    verts = P.vertices
    if len(verts) < 3:
        return 0
    s = 0
    for (x0, y0), (x1, y1) in P.edges():
        s += x0 * y1 - x1 * y0
    return abs(s)


def volume(P: LatticePolygon) -> Fraction:
    return Fraction(doubled_area(P), 2)


def minkowski_sum(P: LatticePolygon, Q: LatticePolygon) -> LatticePolygon:
    return LatticePolygon.hull(add(p, q) for p in P.vertices for q in Q.vertices)


def mixed_volume(P: LatticePolygon, Q: LatticePolygon) -> Fraction:
    """vol(P+Q) - vol(P) - vol(Q), an exact half-integer."""
    s = doubled_area(minkowski_sum(P, Q)) - doubled_area(P) - doubled_area(Q)
    return Fraction(s, 2)


def dilate(P: LatticePolygon, k: int) -> LatticePolygon:
    if k < 1:
        raise ValueError("dilation factor must be >= 1")
    return LatticePolygon(tuple((k * x, k * y) for x, y in P.vertices))


def negate(P: LatticePolygon) -> LatticePolygon:
    return LatticePolygon.hull((-x, -y) for x, y in P.vertices)


def rotate_r(P: LatticePolygon) -> LatticePolygon:
    """Apply the order-3 exponent map (a,b) -> (b,-a-b), then translate
    the result to canonical position."""
    return LatticePolygon.hull(rotate_point(v) for v in P.vertices).canonical()


def contains_translate(
    P: LatticePolygon, Q: "LatticePolygon | Iterable[Point]"
) -> Optional[Point]:
    """Some integer translation t with Q + t inside P, or None.

    The search window is the difference of the bounding boxes; polygons at
    desk scale are tiny, so exhaustive search is fine.
    """
    if isinstance(Q, LatticePolygon):
        qpts: list[Point] = list(Q.vertices)
    else:
        qpts = list(Q)
        if not qpts:
            raise ValueError("empty point set")
    (pxl, pyl), (pxh, pyh) = P.bounding_box()
    qxl = min(p[0] for p in qpts)
    qyl = min(p[1] for p in qpts)
    qxh = max(p[0] for p in qpts)
    qyh = max(p[1] for p in qpts)
    if qxh - qxl > pxh - pxl or qyh - qyl > pyh - pyl:
        return None
    for tx in range(pxl - qxl, pxh - qxh + 1):
        for ty in range(pyl - qyl, pyh - qyh + 1):
            if all((qx + tx, qy + ty) in P for qx, qy in qpts):
                return (tx, ty)
    return None


def lattice_points(P: LatticePolygon) -> list[Point]:
    """All lattice points of P (boundary included), in lexicographic order."""
    (xl, yl), (xh, yh) = P.bounding_box()
    return [
        (x, y)
        for x in range(xl, xh + 1)
        for y in range(yl, yh + 1)
        if (x, y) in P
    ]


def boundary_lattice_points(P: LatticePolygon) -> int:
    """Number of lattice points on the boundary (the lattice perimeter)."""
    P.require_dim2()
    return sum(segment_length(a, b) for a, b in P.edges())


def interior_lattice_points(P: LatticePolygon) -> int:
    """Count of lattice points strictly inside P, via Pick's theorem."""
    P.require_dim2()
    b = boundary_lattice_points(P)
    return (doubled_area(P) - b + 2) // 2


def _ray_angle_cmp(a: Point, b: Point) -> int:
    """CCW angular order starting from the positive x-axis."""

    def half(v: Point) -> int:
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    ha, hb = half(a), half(b)
    if ha != hb:
        return ha - hb
    c = a[0] * b[1] - a[1] * b[0]
    return 0 if c == 0 else (-1 if c > 0 else 1)


def sort_rays_ccw(rays: Iterable[Point]) -> list[Point]:
    return sorted(rays, key=cmp_to_key(_ray_angle_cmp))


@dataclass(frozen=True)
class WeightedFan:
    """Finite set of (primitive direction, positive weight) pairs.

    Zero-weight rays are permitted in intermediate results and removed by
    :meth:`normalized`.
    """

    rays: tuple[tuple[Point, int], ...]

    @staticmethod
    def from_dict(d: dict[Point, int]) -> "WeightedFan":
        return WeightedFan(tuple(sorted(d.items())))

    def as_dict(self) -> dict[Point, int]:
        return dict(self.rays)

    def normalized(self) -> "WeightedFan":
        return WeightedFan(tuple((v, w) for v, w in self.rays if w != 0))

    def is_balanced(self) -> bool:
        sx = sum(v[0] * w for v, w in self.rays)
        sy = sum(v[1] * w for v, w in self.rays)
        return sx == 0 and sy == 0

    def weight(self, v: Point) -> int:
        return self.as_dict().get(v, 0)


def edge_fan(P: LatticePolygon) -> WeightedFan:
    """Normal fan of P weighted by lattice edge lengths (the tropical fan
    of a generic curve with Newton polygon P)."""
    P.require_dim2()
    rays: dict[Point, int] = {}
    for a, b in P.edges():
        dx, dy = sub(b, a)
        n = primitive((dy, -dx))  # outer normal of a CCW edge
        rays[n] = segment_length(a, b)
    return WeightedFan(tuple(sorted(rays.items())))


def standard_triangle(k: int = 1) -> LatticePolygon:
    """The triangle k * Delta with vertices (0,0), (k,0), (0,k)."""
    return LatticePolygon(((0, 0), (k, 0), (0, k)))


def rectangle(c: int, d: int) -> LatticePolygon:
    return LatticePolygon(((0, 0), (c, 0), (c, d), (0, d)))
