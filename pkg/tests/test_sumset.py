import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planesum import (
    Point,
    PointSet,
    canonical_translate,
    convex_hull,
    is_translate_of,
    minkowski_sum,
    unique_representation,
)

TRI = PointSet([(0, 0), (1, 0), (0, 1)])

coords = st.integers(min_value=-20, max_value=20)
points = st.tuples(coords, coords)
point_sets = st.lists(points, min_size=1, max_size=10).map(PointSet)


class TestMinkowskiSum:
    def test_triangle_doubled(self):
        d = minkowski_sum(TRI, TRI)
        assert d == PointSet([(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)])

    def test_singleton_translates(self):
        s = PointSet([(2, 3)])
        assert minkowski_sum(TRI, s) == TRI.translate((2, 3))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            minkowski_sum(PointSet([]), TRI)

    @given(point_sets, point_sets)
    @settings(max_examples=80)
    def test_size_superadditive(self, a, b):
        # |a + b| >= |a| + |b| - 1, with equality only in degenerate shapes
        s = minkowski_sum(a, b)
        assert len(s) >= len(a) + len(b) - 1
        assert len(s) <= len(a) * len(b)

    @given(point_sets, point_sets)
    @settings(max_examples=60)
    def test_commutative(self, a, b):
        assert minkowski_sum(a, b) == minkowski_sum(b, a)

    @given(point_sets, point_sets, points)
    @settings(max_examples=60)
    def test_translation_moves_sum(self, a, b, t):
        assert minkowski_sum(a.translate(t), b) == minkowski_sum(a, b).translate(t)

    @given(point_sets, point_sets)
    @settings(max_examples=60)
    def test_hull_vertices_sum(self, a, b):
        # every hull vertex of the sum is a sum of hull points of the parts
        s = minkowski_sum(a, b)
        hull_a = set(convex_hull(a))
        hull_b = set(convex_hull(b))
        corner_sums = {Point(p.x + q.x, p.y + q.y) for p in hull_a for q in hull_b}
        for v in convex_hull(s):
            assert v in corner_sums


class TestUniqueRepresentation:
    def test_triangle_with_itself_collides(self):
        ok, witness = unique_representation(TRI, TRI)
        assert not ok
        assert witness.point == Point(0, 1)
        assert str(witness) == "(0, 1) = (0, 0)+(0, 1), (0, 1)+(0, 0)"

    def test_widely_scaled_copy_is_unique(self):
        scaled = PointSet([(0, 0), (10, 0), (0, 10)])
        ok, witness = unique_representation(TRI, scaled)
        assert ok and witness is None

    def test_witness_is_lex_smallest_collision(self):
        a = PointSet([(0, 0), (1, 0), (2, 0)])
        b = PointSet([(0, 0), (1, 0)])
        ok, witness = unique_representation(a, b)
        assert not ok
        assert witness.point == Point(1, 0)
        assert witness.pairs == ((Point(0, 0), Point(1, 0)), (Point(1, 0), Point(0, 0)))

    @given(point_sets, point_sets)
    @settings(max_examples=80)
    def test_flag_matches_cardinality(self, a, b):
        ok, witness = unique_representation(a, b)
        assert ok == (len(minkowski_sum(a, b)) == len(a) * len(b))
        if ok:
            assert witness is None
        else:
            assert len(witness.pairs) >= 2
            for p, q in witness.pairs:
                assert p in a and q in b
                assert p + q == witness.point


class TestCanonicalTranslate:
    def test_moves_lex_min_to_origin(self):
        s = PointSet([(3, 4), (5, 1), (3, 7)])
        c = canonical_translate(s)
        assert c.points[0] == Point(0, 0)
        assert c == PointSet([(0, 0), (0, 3), (2, -3)])

    @given(point_sets)
    def test_idempotent(self, s):
        c = canonical_translate(s)
        assert canonical_translate(c) == c

    @given(point_sets, points)
    def test_translation_invariant(self, s, t):
        assert canonical_translate(s.translate(t)) == canonical_translate(s)


class TestIsTranslateOf:
    def test_detects_translates(self):
        assert is_translate_of(TRI, TRI.translate((-7, 9)))

    def test_rejects_rotations(self):
        rot = PointSet([(0, 0), (0, 1), (1, 0)])  # same set, fine
        assert is_translate_of(TRI, rot)
        mirrored = PointSet([(0, 0), (-1, 0), (0, 1)])
        assert not is_translate_of(TRI, mirrored)

    def test_rejects_different_sizes(self):
        assert not is_translate_of(TRI, PointSet([(0, 0)]))
