"""Integer addressing for the triatomic sequence.

Every index N >= 1 names a unique pair (digit tuple, position): the digits
pick a chain of subdivision steps and the position selects one of the three
values attached to that chain.  Digits are kept in application order, so
``digits[0]`` is the first step applied and carries the highest power of
three in the encoding; the position contributes the final units.

A tuple with n digits encodes as

    (3**(n+1) - 3) // 2  +  sum(d[m] * 3**(n - m) for m in range(n)) * 3  +  pos

which lists all addresses level by level, shorter tuples first, then in
lexicographic digit order, with positions 1, 2, 3 adjacent.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple


class IndexTuple(NamedTuple):
    """A level-n address: n ternary digits plus a position in {1, 2, 3}."""

    digits: tuple[int, ...]
    pos: int


def _checked_digits(digits: Iterable[int]) -> tuple[int, ...]:
    digits = tuple(digits)
    for d in digits:
        if d not in (0, 1, 2):
            raise ValueError(f"digit must be 0, 1 or 2, got {d!r}")
    return digits


# ends[L] = last index of level L; grown on demand, entries never change
_LEVEL_ENDS = [3]


def _level_offset(level: int) -> int:
    # number of addresses strictly before the level
    return (3 ** (level + 1) - 3) // 2


def encode(address) -> int:
    """Integer index of an address (an IndexTuple or any (digits, pos) pair)."""
    digits, pos = address
    digits = _checked_digits(digits)
    if pos not in (1, 2, 3):
        raise ValueError(f"pos must be 1, 2 or 3, got {pos!r}")
    value = 0
    for d in digits:
        value = value * 3 + d
    return _level_offset(len(digits)) + value * 3 + pos


def level_of(n: int) -> int:
    """Number of digits in the address of index n."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    ends = _LEVEL_ENDS
    while n > ends[-1]:
        ends.append(ends[-1] + 3 ** (len(ends) + 1))
    lo, hi = 0, len(ends) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if n > ends[mid]:
            lo = mid + 1
        else:
            hi = mid
    return lo


def level_range(level: int) -> tuple[int, int]:
    """Inclusive index range of a level; it holds exactly 3**(level+1) entries."""
    if level < 0:
        raise ValueError(f"level must be >= 0, got {level}")
    start = _level_offset(level) + 1
    return start, start + 3 ** (level + 1) - 1


def decode(n: int) -> IndexTuple:
    """The unique address with encode(address) == n."""
    level = level_of(n)
    q, r = divmod(n - _level_offset(level) - 1, 3)
    digits = [0] * level
    for i in range(level - 1, -1, -1):
        q, digits[i] = divmod(q, 3)
    return IndexTuple(tuple(digits), r + 1)


def parent_positions(n: int) -> tuple[int, int, int]:
    """Indices of positions 1, 2, 3 of n's parent tuple (one digit shorter)."""
    level = level_of(n)
    if level == 0:
        raise ValueError(f"index {n} is in level 0 and has no parent")
    q = (n - _level_offset(level) - 1) // 3
    base = _level_offset(level - 1) + (q // 3) * 3
    return base + 1, base + 2, base + 3
