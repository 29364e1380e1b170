"""The triatomic sequence: triples evolving under three subdivision rules.

A triple (a, b, c) has three children, one per ternary digit:

    0 -> (a, b, a+b+c)      1 -> (b, c, a+b+c)      2 -> (c, a, a+b+c)

Reading off the triple of every digit string in address order, position by
position, yields the sequence itself.  All arithmetic is exact on Python
integers; values grow tribonacci-fast along digit paths.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator, NamedTuple, Sequence

from .indexing import level_of

MEMO_BUDGET_ENV = "STERN3_MEMO_BUDGET"
DEFAULT_MEMO_BUDGET = 1 << 20


class Triple(NamedTuple):
    v1: int
    v2: int
    v3: int


UNIT_SEED = Triple(1, 1, 1)


def as_seed(seed: Sequence[int]) -> Triple:
    """Validate a three-component seed of nonnegative integers."""
    a, b, c = seed
    for x in (a, b, c):
        if not isinstance(x, int) or x < 0:
            raise ValueError(f"seed components must be nonnegative integers, got {x!r}")
    return Triple(a, b, c)


def child_triple(triple: Sequence[int], digit: int) -> Triple:
    """One subdivision step applied to a triple."""
    a, b, c = triple
    s = a + b + c
    if digit == 0:
        return Triple(a, b, s)
    if digit == 1:
        return Triple(b, c, s)
    if digit == 2:
        return Triple(c, a, s)
    raise ValueError(f"digit must be 0, 1 or 2, got {digit!r}")


def triple_of(digits: Iterable[int], seed: Sequence[int] = UNIT_SEED) -> Triple:
    """Fold child_triple over the digits, first digit applied first."""
    t = as_seed(seed)
    for d in digits:
        t = child_triple(t, d)
    return t


def _memo_budget(override: int | None) -> int:
    if override is not None:
        return max(0, int(override))
    raw = os.environ.get(MEMO_BUDGET_ENV)
    if raw is None:
        return DEFAULT_MEMO_BUDGET
    try:
        return max(0, int(raw))
    except ValueError:
        raise ValueError(f"{MEMO_BUDGET_ENV} must be an integer, got {raw!r}") from None


def term(n: int, seed: Sequence[int] = UNIT_SEED, memo_budget: int | None = None) -> int:
    """Sequence value at index n, by the parent recursion.

    The nine-case recursion keys on the last digit and the position: positions
    1 and 2 copy one value from the parent triple, position 3 sums all three.
    The memo table is capped at ``memo_budget`` entries (default from the
    STERN3_MEMO_BUDGET environment variable); once full, deeper calls
    recompute instead of caching, which costs O(level**2) at worst, never an
    error.
    """
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    seed_values = as_seed(seed)
    budget = _memo_budget(memo_budget)
    memo: dict[int, int] = {}

    def walk(idx: int) -> int:
        if idx <= 3:
            return seed_values[idx - 1]
        cached = memo.get(idx)
        if cached is not None:
            return cached
        level = level_of(idx)
        q, r = divmod(idx - (3 ** (level + 1) - 3) // 2 - 1, 3)
        last_digit = q % 3
        base = (3 ** level - 3) // 2 + (q // 3) * 3  # parent tuple, position 0
        if r == 2:
            value = walk(base + 1) + walk(base + 2) + walk(base + 3)
        elif last_digit == 0:
            value = walk(base + 1 + r)
        elif last_digit == 1:
            value = walk(base + 2 + r)
        else:
            value = walk(base + 3) if r == 0 else walk(base + 1)
        if len(memo) < budget:
            memo[idx] = value
        return value

    return walk(n)


def subtree_triples(root: Sequence[int], depth: int) -> Iterator[Triple]:
    """Triples of all digit strings of length ``depth`` below ``root``, in
    lexicographic digit order.  Lazy: live memory stays O(depth)."""
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    root = Triple(*root)
    if depth == 0:
        yield root
        return
    for a, b, c in subtree_triples(root, depth - 1):
        s = a + b + c
        yield Triple(a, b, s)
        yield Triple(b, c, s)
        yield Triple(c, a, s)


def level_triples(level: int, seed: Sequence[int] = UNIT_SEED) -> Iterator[Triple]:
    """All triples of a level, in address order."""
    return subtree_triples(as_seed(seed), level)


def level_terms(level: int, seed: Sequence[int] = UNIT_SEED) -> Iterator[int]:
    """The 3**(level+1) sequence values of a level, in index order."""
    for t in level_triples(level, seed):
        yield from t


def terms(count: int, seed: Sequence[int] = UNIT_SEED) -> Iterator[int]:
    """The first ``count`` values a_1, a_2, ..., streamed level by level."""
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    emitted, level = 0, 0
    while emitted < count:
        for value in level_terms(level, seed):
            yield value
            emitted += 1
            if emitted == count:
                return
        level += 1
