"""Exact primitives for finite planar point sets with integer coordinates.

All predicates are decided with integer arithmetic only. Python integers are
arbitrary precision, so cross products and dot products are exact at any
coordinate magnitude; there is no overflow to guard against.

Conventions used throughout:

* ``orientation(p, q, r)`` returns the sign of the cross product
  ``(q - p) x (r - p)``: +1 when the walk p -> q -> r turns left
  (counterclockwise), -1 when it turns right, 0 when the three points are
  collinear.
* Convex hulls are vertex cycles in counterclockwise order with no three
  consecutive collinear vertices. For a CCW hull the outward normal of the
  edge ``a -> b`` is ``b - a`` rotated a quarter turn clockwise.
* Directions are primitive integer vectors (gcd of components is 1). A
  direction and its negation are distinct: they matter separately for arc
  decompositions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence, Union

from .errors import (
    CollinearInput,
    DirectionNotGeneric,
    NotCollinear,
    PointNotInSet,
)

Coords = Union["Point", tuple]


class Point(NamedTuple):
    """Lattice point. Tuple-compatible, so ``Point(0, 1) == (0, 1)``."""

    x: int
    y: int

    def __add__(self, other: Coords) -> "Point":
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other: Coords) -> "Point":
        return Point(self.x - other[0], self.y - other[1])

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)


@dataclass(frozen=True, order=True)
class Direction:
    """Primitive nonzero integer vector; construction enforces primitivity."""

    dx: int
    dy: int

    def __post_init__(self):
        if self.dx == 0 and self.dy == 0:
            raise ValueError("direction must be nonzero")
        if math.gcd(abs(self.dx), abs(self.dy)) != 1:
            raise ValueError(f"direction ({self.dx}, {self.dy}) is not primitive")

    @staticmethod
    def of(dx: int, dy: int) -> "Direction":
        """Reduce an arbitrary nonzero vector to its primitive direction."""
        if dx == 0 and dy == 0:
            raise ValueError("direction must be nonzero")
        g = math.gcd(abs(dx), abs(dy))
        return Direction(dx // g, dy // g)

    def __neg__(self) -> "Direction":
        return Direction(-self.dx, -self.dy)

    def dot(self, p: Coords) -> int:
        return self.dx * p[0] + self.dy * p[1]

    def cross(self, other: "Direction") -> int:
        return self.dx * other.dy - self.dy * other.dx

    def perp_cw(self) -> "Direction":
        """Quarter turn clockwise: (dx, dy) -> (dy, -dx)."""
        return Direction(self.dy, -self.dx)

    def parallel_to(self, other: "Direction") -> bool:
        return self.cross(other) == 0


class PointSet:
    """Immutable set of distinct points, iterated in lexicographic order."""

    __slots__ = ("points", "_members")

    def __init__(self, points: Iterable[Coords]):
        pts = sorted({Point(p[0], p[1]) for p in points})
        object.__setattr__(self, "points", tuple(pts))
        object.__setattr__(self, "_members", frozenset(pts))

    def __setattr__(self, name, value):
        raise AttributeError("PointSet is immutable")

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p: object) -> bool:
        return p in self._members

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PointSet):
            return self.points == other.points
        return NotImplemented

    def __lt__(self, other: "PointSet") -> bool:
        return self.points < other.points

    def __le__(self, other: "PointSet") -> bool:
        return self.points <= other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        inner = ", ".join(f"({p.x}, {p.y})" for p in self.points)
        return f"PointSet([{inner}])"

    def translate(self, v: Coords) -> "PointSet":
        vx, vy = v[0], v[1]
        return PointSet(Point(p.x + vx, p.y + vy) for p in self.points)


def orientation(p: Coords, q: Coords, r: Coords) -> int:
    """Sign of (q - p) x (r - p): +1 left turn, -1 right turn, 0 collinear."""
    det = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def convex_hull(points: Union[PointSet, Iterable[Coords]]) -> tuple:
    """Hull vertices in CCW order, no three consecutive collinear.

    A single point hulls to itself; a collinear set hulls to its two
    lexicographic extremes. Monotone chain over the sorted points.
    """
    if isinstance(points, PointSet):
        pts = list(points.points)
    else:
        pts = sorted({Point(p[0], p[1]) for p in points})
    if not pts:
        raise ValueError("convex_hull of an empty set")
    if len(pts) == 1:
        return (pts[0],)

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and orientation(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return tuple(lower[:-1] + upper[:-1])


@dataclass(frozen=True)
class NormalCone:
    """Closed CCW range [lo, hi] of outward edge normals at a boundary point.

    ``lo == hi`` for a point in the relative interior of a hull edge. At a
    hull vertex the range runs CCW from the incoming edge's normal to the
    outgoing edge's normal and spans strictly less than a half turn.
    """

    at: Point
    lo: Direction
    hi: Direction

    def __contains__(self, d: Direction) -> bool:
        if self.lo == self.hi:
            return d == self.lo
        return self.lo.cross(d) >= 0 and d.cross(self.hi) >= 0


def cones_intersect(c1: NormalCone, c2: NormalCone) -> bool:
    """Whether two normal cones share a direction, boundary rays included.

    Both arcs span less than a half turn, so a nonempty intersection must
    contain an endpoint of one of the arcs.
    """
    return c1.lo in c2 or c1.hi in c2 or c2.lo in c1 or c2.hi in c1


@dataclass(frozen=True)
class HullDecomposition:
    """A non-collinear point set split into hull-boundary and interior parts.

    ``boundary`` holds every point lying on the hull's edge cycle (vertices
    included); ``interior`` holds the points strictly inside. ``b`` and ``i``
    are the respective counts.
    """

    points: PointSet
    hull_vertices: tuple
    boundary: PointSet
    interior: PointSet

    @property
    def b(self) -> int:
        return len(self.boundary)

    @property
    def i(self) -> int:
        return len(self.interior)

    @cached_property
    def hull_edges(self) -> tuple:
        """CCW edge cycle as (tail, head) vertex pairs."""
        vs = self.hull_vertices
        n = len(vs)
        return tuple((vs[k], vs[(k + 1) % n]) for k in range(n))

    @cached_property
    def edge_normals(self) -> tuple:
        """Primitive outward normal of each CCW hull edge, in edge order."""
        return tuple(_outward_normal(a, b) for a, b in self.hull_edges)

    @cached_property
    def cones(self) -> dict:
        """Normal cone for every boundary point, keyed by the point."""
        vs = self.hull_vertices
        n = len(vs)
        normals = self.edge_normals
        out = {}
        for k, v in enumerate(vs):
            out[v] = NormalCone(at=v, lo=normals[(k - 1) % n], hi=normals[k])
        for p in self.boundary:
            if p in out:
                continue
            for k, (a, b) in enumerate(self.hull_edges):
                if orientation(a, b, p) == 0 and _within_box(a, b, p):
                    out[p] = NormalCone(at=p, lo=normals[k], hi=normals[k])
                    break
        return out


def _outward_normal(a: Point, b: Point) -> Direction:
    return Direction.of(b.y - a.y, -(b.x - a.x))


def _within_box(a: Coords, b: Coords, p: Coords) -> bool:
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def classify_points(points: Union[PointSet, Iterable[Coords]]) -> HullDecomposition:
    """Partition a non-collinear set into hull boundary and strict interior.

    A point of the set is interior exactly when it is strictly left of every
    directed CCW hull edge; otherwise it lies on some edge and is boundary.
    """
    ps = points if isinstance(points, PointSet) else PointSet(points)
    hull = convex_hull(ps)
    if len(hull) < 3:
        raise CollinearInput(f"{len(ps)} points spanning no area")
    n = len(hull)
    boundary = []
    interior = []
    for p in ps:
        strict = True
        for k in range(n):
            if orientation(hull[k], hull[(k + 1) % n], p) == 0:
                strict = False
                break
        (interior if strict else boundary).append(p)
    return HullDecomposition(
        points=ps,
        hull_vertices=hull,
        boundary=PointSet(boundary),
        interior=PointSet(interior),
    )


def support_set(points: Union[PointSet, Iterable[Coords]], u: Direction) -> PointSet:
    """Points of the set maximizing the dot product with u (always collinear)."""
    ps = points if isinstance(points, PointSet) else PointSet(points)
    if not len(ps):
        raise ValueError("support_set of an empty set")
    best = max(u.dot(p) for p in ps)
    return PointSet(p for p in ps if u.dot(p) == best)


def normal_cone(decomp: HullDecomposition, p: Coords) -> Optional[NormalCone]:
    """Normal cone of a point of the decomposed set; None for interior points."""
    pt = Point(p[0], p[1])
    if pt not in decomp.points:
        raise PointNotInSet(f"({pt.x}, {pt.y})")
    return decomp.cones.get(pt)


def _candidate_directions() -> Iterator[Direction]:
    # One representative per +-pair: dx > 0, or dx == 0 with dy == 1. Ordered
    # by max(|dx|, |dy|), then dx, then |dy| with the positive dy first.
    yield Direction(0, 1)
    n = 1
    while True:
        for dx in range(1, n + 1):
            for ady in range(0, n + 1):
                if max(dx, ady) != n:
                    continue
                if math.gcd(dx, ady) != 1:
                    continue
                if ady == 0:
                    yield Direction(dx, 0)
                else:
                    yield Direction(dx, ady)
                    yield Direction(dx, -ady)
        n += 1


def generic_direction(a: Union[PointSet, Iterable[Coords]],
                      b: Union[PointSet, Iterable[Coords]]) -> Direction:
    """Smallest enumerated direction parallel to no hull edge of [a] or [b]."""
    edges = []
    for s in (a, b):
        hull = convex_hull(s)
        m = len(hull)
        if m == 1:
            continue
        if m == 2:
            edges.append(Direction.of(hull[1].x - hull[0].x, hull[1].y - hull[0].y))
            continue
        for k in range(m):
            p, q = hull[k], hull[(k + 1) % m]
            edges.append(Direction.of(q.x - p.x, q.y - p.y))
    for cand in _candidate_directions():
        if all(not cand.parallel_to(e) for e in edges):
            return cand
    raise AssertionError("unreachable: finitely many edges")


@dataclass(frozen=True)
class ArcDecomposition:
    """Boundary split induced by a direction v that no hull edge parallels.

    ``l`` and ``r`` are the unique extreme points against v rotated a quarter
    turn clockwise (the strict minimizer and maximizer). Every other boundary
    point lands in ``upp`` when all its outward normals u have u . v > 0 and
    in ``low`` when they all have u . v < 0, so |upp| + |low| = b - 2.
    """

    v: Direction
    l: Point
    r: Point
    upp: PointSet
    low: PointSet


def arc_decomposition(points: Union[PointSet, HullDecomposition, Iterable[Coords]],
                      v: Direction) -> ArcDecomposition:
    """Split the boundary of a non-collinear set by the generic direction v."""
    decomp = points if isinstance(points, HullDecomposition) else classify_points(points)
    for a, b in decomp.hull_edges:
        if (b.x - a.x) * v.dy - (b.y - a.y) * v.dx == 0:
            raise DirectionNotGeneric(
                f"({v.dx}, {v.dy}) is parallel to hull edge {tuple(a)} -> {tuple(b)}"
            )
    w = v.perp_cw()
    keyed = [(w.dot(p), p) for p in decomp.points]
    lo_key = min(k for k, _ in keyed)
    hi_key = max(k for k, _ in keyed)
    lows = [p for k, p in keyed if k == lo_key]
    highs = [p for k, p in keyed if k == hi_key]
    if len(lows) != 1 or len(highs) != 1:
        raise DirectionNotGeneric(f"({v.dx}, {v.dy}) leaves extreme points tied")
    l, r = lows[0], highs[0]
    upp = []
    low = []
    for p in decomp.boundary:
        if p == l or p == r:
            continue
        cone = decomp.cones[p]
        s_lo = cone.lo.dot((v.dx, v.dy))
        s_hi = cone.hi.dot((v.dx, v.dy))
        if s_lo > 0 and s_hi > 0:
            upp.append(p)
        elif s_lo < 0 and s_hi < 0:
            low.append(p)
        else:
            raise AssertionError(f"straddling cone at non-extreme point {tuple(p)}")
    return ArcDecomposition(v=v, l=l, r=r, upp=PointSet(upp), low=PointSet(low))


def _collinear(pts: Sequence[Point]) -> bool:
    if len(pts) <= 2:
        return True
    p0, p1 = pts[0], pts[1]
    return all(orientation(p0, p1, p) == 0 for p in pts[2:])


def is_ap_same_difference(c: Union[PointSet, Iterable[Coords]],
                          d: Union[PointSet, Iterable[Coords]]) -> bool:
    """Whether two collinear sets add with no slack in the segment count.

    True when either set is a single point, or both are arithmetic
    progressions with the same difference vector. Lexicographic order along
    parallel lines is consistent, so the sorted difference vectors compare
    directly.
    """
    cs = c if isinstance(c, PointSet) else PointSet(c)
    ds = d if isinstance(d, PointSet) else PointSet(d)
    if not len(cs) or not len(ds):
        raise ValueError("progression test needs nonempty sets")
    for name, s in (("first", cs), ("second", ds)):
        if not _collinear(s.points):
            raise NotCollinear(f"{name} set is not collinear")
    if len(cs) == 1 or len(ds) == 1:
        return True

    def common_difference(pts):
        step = pts[1] - pts[0]
        for k in range(2, len(pts)):
            if pts[k] - pts[k - 1] != step:
                return None
        return step

    dc = common_difference(cs.points)
    dd = common_difference(ds.points)
    return dc is not None and dd is not None and dc == dd
