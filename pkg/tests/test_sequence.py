"""Core sequence tests.

Frozen values come from the opening listing 1,1,1, 1,1,3, 1,1,3, 1,1,3,
then the level-2 block 1,1,5, 1,3,5, 3,1,5 repeated three times; derived
values are recomputed in place by explicit child steps.
"""

import random

import pytest

from stern3.indexing import decode, level_range
from stern3.sequence import (
    UNIT_SEED,
    Triple,
    child_triple,
    level_terms,
    level_triples,
    term,
    terms,
    triple_of,
)

FIRST_39 = [1, 1, 1] + [1, 1, 3] * 3 + [1, 1, 5, 1, 3, 5, 3, 1, 5] * 3


class TestChildTriple:
    def test_unit_seed_children(self):
        assert child_triple((1, 1, 1), 0) == Triple(1, 1, 3)
        assert child_triple((1, 1, 1), 1) == Triple(1, 1, 3)
        assert child_triple((1, 1, 3), 1) == Triple(1, 3, 5)

    def test_zero_seed_is_fixed(self):
        for d in (0, 1, 2):
            assert child_triple((0, 0, 0), d) == Triple(0, 0, 0)

    def test_rejects_bad_digit(self):
        with pytest.raises(ValueError):
            child_triple((1, 1, 1), 3)


class TestTripleOf:
    def test_empty_string_is_seed(self):
        assert triple_of(()) == UNIT_SEED

    def test_level_two_listing(self):
        assert triple_of((0, 1)) == Triple(1, 3, 5)

    def test_two_ones_by_explicit_steps(self):
        expected = child_triple(child_triple(UNIT_SEED, 1), 1)
        assert expected == Triple(1, 3, 5)
        assert triple_of((1, 1)) == expected

    def test_rejects_negative_seed(self):
        with pytest.raises(ValueError):
            triple_of((0,), (1, -1, 1))


class TestTerm:
    def test_first_examples(self):
        assert term(1) == 1
        assert term(6) == 3
        assert term(27) == 5

    def test_first_39(self):
        assert [term(n) for n in range(1, 40)] == FIRST_39

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            term(0)

    def test_seed_echo(self):
        assert [term(n, (2, 3, 4)) for n in (1, 2, 3)] == [2, 3, 4]

    def test_matches_triple_route(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randrange(1, 3**9)
            digits, pos = decode(n)
            assert term(n) == triple_of(digits)[pos - 1]

    def test_memoized_and_unmemoized_agree(self):
        rng = random.Random(11)
        for _ in range(10**4):
            n = rng.randrange(1, 3**10 + 1)
            assert term(n, memo_budget=0) == term(n)

    def test_env_budget(self, monkeypatch):
        monkeypatch.setenv("STERN3_MEMO_BUDGET", "0")
        assert term(3**9 + 5) == term(3**9 + 5, memo_budget=None)
        monkeypatch.setenv("STERN3_MEMO_BUDGET", "junk")
        with pytest.raises(ValueError):
            term(10)


class TestLevelTerms:
    def test_level_zero_is_seed(self):
        assert list(level_terms(0)) == [1, 1, 1]

    def test_level_one(self):
        assert list(level_terms(1)) == [1, 1, 3] * 3

    def test_level_two(self):
        assert list(level_terms(2)) == [1, 1, 5, 1, 3, 5, 3, 1, 5] * 3

    def test_matches_term_by_position(self):
        lo, hi = level_range(3)
        assert list(level_terms(3)) == [term(n) for n in range(lo, hi + 1)]

    def test_terms_stream(self):
        assert list(terms(39)) == FIRST_39
        assert list(terms(3, (2, 3, 4))) == [2, 3, 4]
        assert list(terms(0)) == []


class TestInvariants:
    def test_all_values_odd_with_unit_seed(self):
        for level in range(7):
            assert all(v % 2 == 1 for v in level_terms(level))

    def test_v3_strictly_increases_along_paths(self):
        rng = random.Random(3)
        for _ in range(100):
            t = UNIT_SEED
            for _ in range(30):
                child = child_triple(t, rng.randrange(3))
                assert child.v3 > t.v3
                t = child

    def test_level_triples_count(self):
        for level in range(6):
            assert sum(1 for _ in level_triples(level)) == 3**level
