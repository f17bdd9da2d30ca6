"""Minkowski sumsets of finite planar point sets and translation normal forms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .geometry import Point, PointSet


@dataclass(frozen=True)
class SumWitness:
    """A sum point with at least two distinct representations a + b."""

    point: Point
    pairs: tuple  # ((a1, b1), (a2, b2), ...) sorted

    def __str__(self) -> str:
        reps = ", ".join(f"{tuple(a)}+{tuple(b)}" for a, b in self.pairs)
        return f"{tuple(self.point)} = {reps}"


def minkowski_sum(a: PointSet, b: PointSet) -> PointSet:
    """All pairwise sums {p + q : p in a, q in b}."""
    if not len(a) or not len(b):
        raise ValueError("minkowski_sum needs nonempty sets")
    return PointSet(Point(p.x + q.x, p.y + q.y) for p in a for q in b)


def unique_representation(a: PointSet, b: PointSet) -> Tuple[bool, Optional[SumWitness]]:
    """Whether every sum point has exactly one representation.

    Holds exactly when |a + b| = |a| * |b|. On failure returns the
    lexicographically smallest multiply-represented sum point with all of
    its representations.
    """
    s = minkowski_sum(a, b)
    if len(s) == len(a) * len(b):
        return True, None
    reps: dict = {}
    for p in a:
        for q in b:
            reps.setdefault(p + q, []).append((p, q))
    collided = min(pt for pt, pairs in reps.items() if len(pairs) > 1)
    return False, SumWitness(point=collided, pairs=tuple(sorted(reps[collided])))


def canonical_translate(s: PointSet) -> PointSet:
    """Translate so the lexicographically smallest point sits at the origin."""
    if not len(s):
        raise ValueError("canonical_translate of an empty set")
    base = s.points[0]
    return s.translate((-base.x, -base.y))


def is_translate_of(a: PointSet, b: PointSet) -> bool:
    """Whether the two sets differ by a translation only."""
    if len(a) != len(b):
        return False
    if not len(a):
        return True
    return canonical_translate(a) == canonical_translate(b)
