"""Farey map tests.

The independent oracle for cone containment is a from-scratch barycentric
solve: express the point as an affine combination of the projected corner
points and check the coordinates are nonnegative.  Everything runs on
exact Fractions.
"""

import itertools
import random
from fractions import Fraction

import pytest

from stern3.farey import (
    OutOfDomain,
    RationalPoint,
    ZeroDenominator,
    apply_map,
    as_point,
    classify,
    cone_contains,
    cone_corners,
    expand,
    in_domain,
    in_subtriangle,
    project,
)

F = Fraction


def barycentric_coordinates(corners, p):
    """Solve p = l1*c1 + l2*c2 + l3*c3 with l1+l2+l3 = 1 (test oracle)."""
    (x1, y1), (x2, y2), (x3, y3) = corners
    x, y = p
    den = (y2 - y3) * (x1 - x3) + (x3 - x2) * (y1 - y3)
    l1 = ((y2 - y3) * (x - x3) + (x3 - x2) * (y - y3)) / den
    l2 = ((y3 - y1) * (x - x3) + (x1 - x3) * (y - y3)) / den
    return l1, l2, 1 - l1 - l2


def contains_oracle(corners, p):
    return all(c >= 0 for c in barycentric_coordinates(corners, p))


def random_point(rng, max_den=40):
    x = F(rng.randrange(0, max_den + 1), max_den)
    y = x * F(rng.randrange(0, max_den + 1), max_den)
    return RationalPoint(x, y)


class TestClassify:
    def test_examples(self):
        assert classify((1, 0)) == 0
        assert classify((F(2, 3), F(1, 3))) == 0  # common vertex: lowest digit wins
        assert classify((1, 1)) == 1

    def test_strict_interior_points(self):
        assert classify((F(1, 2), F(1, 8))) == 0
        assert classify((F(9, 10), F(1, 2))) == 1
        assert classify((F(7, 10), F(6, 10))) == 2

    def test_rejects_outside_domain(self):
        for p in ((F(1, 3), F(2, 3)), (2, 0), (F(-1, 2), 0)):
            with pytest.raises(OutOfDomain):
                classify(p)

    def test_in_subtriangle_rejects_bad_digit(self):
        with pytest.raises(ValueError):
            in_subtriangle(3, (0, 0))


class TestApplyMap:
    def test_common_vertex_maps_to_top(self):
        assert apply_map((F(2, 3), F(1, 3))) == as_point((1, 1))

    def test_fixed_vertex(self):
        assert apply_map((1, 0)) == as_point((1, 0))

    def test_top_vertex_maps_to_right(self):
        assert apply_map((1, 1)) == as_point((1, 0))

    def test_image_stays_in_domain(self):
        rng = random.Random(2)
        for _ in range(300):
            assert in_domain(apply_map(random_point(rng)))

    def test_rejects_outside_domain(self):
        with pytest.raises(OutOfDomain):
            apply_map((0, 1))


class TestExpand:
    def test_fixed_point_of_branch_zero(self):
        assert expand((1, 0), 3) == [0, 0, 0]

    def test_common_vertex(self):
        assert expand((F(2, 3), F(1, 3)), 2) == [0, 1]

    def test_top_vertex(self):
        assert expand((1, 1), 2) == [1, 0]

    def test_requested_length(self):
        rng = random.Random(4)
        for _ in range(50):
            assert len(expand(random_point(rng), 10)) == 10

    def test_rejects_bad_count(self):
        with pytest.raises(ValueError):
            expand((1, 0), 0)


class TestProject:
    def test_corner_vectors(self):
        assert project((0, 0, 1)) == as_point((0, 0))
        assert project((1, 0, 1)) == as_point((1, 0))
        assert project((1, 1, 1)) == as_point((1, 1))

    def test_mediant_vector(self):
        assert project((2, 1, 3)) == as_point((F(2, 3), F(1, 3)))

    def test_zero_third_coordinate(self):
        with pytest.raises(ZeroDenominator):
            project((1, 2, 0))


class TestConeContains:
    def test_empty_string_is_whole_domain(self):
        rng = random.Random(6)
        for _ in range(50):
            assert cone_contains((), random_point(rng))

    def test_vertex_membership(self):
        # (1,0) projects the shared corner of the digit-0 and digit-1 cones
        assert cone_contains((0,), (1, 0))
        assert cone_contains((1,), (1, 0))
        assert not cone_contains((2,), (1, 0))
        assert not cone_contains((1,), (F(1, 4), F(1, 8)))

    def test_against_barycentric_oracle(self):
        rng = random.Random(8)
        prefixes = [(), (0,), (1,), (2,), (0, 2), (1, 1), (2, 0, 1)]
        for _ in range(200):
            p = random_point(rng)
            for digits in prefixes:
                assert cone_contains(digits, p) == contains_oracle(cone_corners(digits), p)

    def test_digit_cones_equal_subtriangle_systems(self):
        rng = random.Random(9)
        for _ in range(300):
            p = random_point(rng)
            for d in (0, 1, 2):
                assert cone_contains((d,), p) == in_subtriangle(d, p)


class TestPartition:
    def test_every_point_matches_some_subtriangle(self):
        rng = random.Random(10)
        for _ in range(500):
            p = random_point(rng)
            matched = [d for d in (0, 1, 2) if in_subtriangle(d, p)]
            assert matched
            if len(matched) > 1:
                # overlap only happens on shared edges: some barycentric
                # coordinate vanishes for each matched subtriangle
                for d in matched:
                    coords = barycentric_coordinates(cone_corners((d,)), p)
                    assert 0 in coords

    def test_subdivision_vertices_through_depth_5(self):
        seen = {(0, 0, 1), (1, 0, 1), (1, 1, 1)}
        frontier = [((0, 0, 1), (1, 0, 1), (1, 1, 1))]
        for _ in range(5):
            next_frontier = []
            for v1, v2, v3 in frontier:
                m = tuple(a + b + c for a, b, c in zip(v1, v2, v3))
                seen.add(m)
                next_frontier += [(v1, v2, m), (v2, v3, m), (v3, v1, m)]
            frontier = next_frontier
        for vector in seen:
            p = project(vector)
            assert in_domain(p)
            assert any(in_subtriangle(d, p) for d in (0, 1, 2))

    def test_nested_cones_cover_their_parent(self):
        rng = random.Random(13)
        for _ in range(60):
            prefix = tuple(rng.randrange(3) for _ in range(rng.randrange(4)))
            p = random_point(rng)
            if not cone_contains(prefix, p):
                continue
            children = [prefix + (d,) for d in (0, 1, 2)]
            assert any(cone_contains(c, p) for c in children)


class TestExpansionConsistency:
    def test_prefixes_contain_the_point(self):
        rng = random.Random(14)
        for _ in range(100):
            p = random_point(rng)
            digits = expand(p, 10)
            for k in range(1, len(digits) + 1):
                assert cone_contains(digits[:k], p)
