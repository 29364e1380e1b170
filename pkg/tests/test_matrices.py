"""Matrix-route and generating-series tests.

The triple recursion serves as the independent oracle for bottom rows; the
recursion's term() serves as the oracle for series coefficients.
"""

import itertools
import random

import pytest

from stern3.indexing import level_range
from stern3.matrices import (
    DIGIT_MATRICES,
    IDENTITY,
    VERTEX_MATRIX,
    IntSeries,
    bottom_row,
    det,
    digit_matrix,
    mat_mul,
    product_over,
    series_coefficients,
)
from stern3.sequence import Triple, child_triple, level_terms, term, triple_of


class TestDigitMatrices:
    def test_exact_entries(self):
        assert digit_matrix(0) == ((1, 0, 1), (0, 1, 1), (0, 0, 1))
        assert digit_matrix(1) == ((0, 0, 1), (1, 0, 1), (0, 1, 1))
        assert digit_matrix(2) == ((0, 1, 1), (0, 0, 1), (1, 0, 1))

    def test_rejects_bad_digit(self):
        with pytest.raises(ValueError):
            digit_matrix(3)

    def test_unimodular(self):
        for m in DIGIT_MATRICES:
            assert det(m) == 1

    def test_third_column_all_ones_others_basis(self):
        for m in DIGIT_MATRICES:
            assert all(row[2] == 1 for row in m)
            for j in (0, 1):
                column = [m[i][j] for i in range(3)]
                assert sorted(column) == [0, 0, 1]

    def test_right_action_matches_child_triple(self):
        t = (2, 3, 7)
        for d in (0, 1, 2):
            m = digit_matrix(d)
            acted = tuple(sum(t[k] * m[k][j] for k in range(3)) for j in range(3))
            assert acted == child_triple(t, d)


class TestProductOver:
    def test_empty_product_is_vertex_matrix(self):
        assert product_over(()) == VERTEX_MATRIX

    def test_identity_helper(self):
        assert mat_mul(IDENTITY, VERTEX_MATRIX) == VERTEX_MATRIX

    def test_level_one_bottom_row(self):
        assert product_over((0,))[2] == (1, 1, 3)
        assert bottom_row((2,)) == Triple(1, 1, 3)

    def test_level_two_bottom_rows(self):
        assert bottom_row((0, 1)) == Triple(1, 3, 5)
        assert bottom_row((1, 1)) == triple_of((1, 1))

    def test_products_have_positive_bottom_row(self):
        for digits in itertools.product((0, 1, 2), repeat=4):
            assert all(v > 0 for v in product_over(digits)[2])

    def test_products_stay_unimodular(self):
        rng = random.Random(5)
        for _ in range(50):
            digits = [rng.randrange(3) for _ in range(rng.randrange(1, 12))]
            m = IDENTITY
            for d in digits:
                m = mat_mul(m, digit_matrix(d))
            assert det(m) == 1


class TestBottomRowAgainstRecursion:
    def test_exhaustive_through_length_8(self):
        # depth-first so each prefix product is computed once
        def walk(m, t, depth):
            assert m[2] == t
            if depth == 8:
                return
            for d in (0, 1, 2):
                walk(mat_mul(m, digit_matrix(d)), child_triple(t, d), depth + 1)

        walk(VERTEX_MATRIX, (1, 1, 1), 0)

    def test_random_longer_strings(self):
        rng = random.Random(12)
        for _ in range(10**3):
            digits = [rng.randrange(3) for _ in range(rng.randrange(9, 17))]
            assert bottom_row(digits) == triple_of(digits)


class TestIntSeries:
    def test_truncation_on_construction(self):
        s = IntSeries([1, 2, 3, 4], 3)
        assert s.coeffs == [1, 2, 3]
        assert s.coeff(2) == 3
        with pytest.raises(IndexError):
            s.coeff(3)

    def test_add_and_mul_truncate(self):
        a = IntSeries([1, 1, 1], 4)
        b = IntSeries([0, 1], 4)
        assert (a + b).coeffs == [1, 2, 1]
        assert (a * b).coeffs == [0, 1, 1, 1]
        assert (a * a).coeffs == [1, 2, 3, 2]  # x^4 term dropped

    def test_shift_and_compose(self):
        s = IntSeries([1, 2], 10)
        assert s.shift(3).coeffs == [0, 0, 0, 1, 2]
        assert s.compose_xpow(4).coeffs == [1, 0, 0, 0, 2]
        assert IntSeries([1, 1, 1], 5).compose_xpow(2).coeffs == [1, 0, 1, 0, 1]

    def test_exactness_with_big_integers(self):
        big = 10**40
        s = IntSeries([big, big], 5)
        assert (s * s).coeff(1) == 2 * big * big


class TestSeriesCoefficients:
    def test_first_block(self):
        s = series_coefficients(12)
        assert s.coeff(1) == 1
        assert s.coeff(6) == 3
        assert [s.coeff(n) for n in range(1, 13)] == [1, 1, 1, 1, 1, 3, 1, 1, 3, 1, 1, 3]

    def test_level_two_block(self):
        s = series_coefficients(39)
        assert [s.coeff(n) for n in range(13, 40)] == list(level_terms(2))

    def test_zero_constant_coefficient(self):
        assert series_coefficients(5).coeff(0) == 0

    def test_block_support_matches_level_ranges(self):
        s = series_coefficients(363)
        for level in range(5):
            lo, hi = level_range(level)
            assert [s.coeff(n) for n in range(lo, hi + 1)] == list(level_terms(level))

    def test_agrees_with_recursion_through_level_4(self):
        s = series_coefficients(363)
        for n in range(1, 364):
            assert s.coeff(n) == term(n)

    def test_rejects_nonpositive_bound(self):
        with pytest.raises(ValueError):
            series_coefficients(0)
