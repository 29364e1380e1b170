"""Classical two-term Stern sequence: the one-dimensional baseline that the
triatomic construction generalizes, with its own matrix route as a sanity
oracle."""

from __future__ import annotations

from typing import Iterable, Sequence

Mat2 = tuple[tuple[int, int], tuple[int, int]]

STEP_MATRICES: tuple[Mat2, Mat2] = (((1, 1), (0, 1)), ((1, 0), (1, 1)))
SEED_MATRIX: Mat2 = ((0, 1), (1, 1))


def diatomic_term(n: int) -> int:
    """Value at n of the sequence 0, 1, 1, 2, 1, 3, 2, 3, 1, 4, ...

    Even indices copy their half, odd indices sum the two neighbours of
    their half.
    """
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    memo = {0: 0, 1: 1}

    def walk(i: int) -> int:
        value = memo.get(i)
        if value is None:
            half, odd = divmod(i, 2)
            value = walk(half) + walk(half + 1) if odd else walk(half)
            memo[i] = value
        return value

    return walk(n)


def diatomic_terms(count: int) -> list[int]:
    """First ``count`` values, computed bottom-up."""
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    values = [0, 1][:count]
    for i in range(2, count):
        half, odd = divmod(i, 2)
        values.append(values[half] + values[half + 1] if odd else values[half])
    return values


def stern_bits(n: int) -> tuple[int, ...]:
    """Bit decomposition (i_k, ..., i_1) with n = 2**k + 1 + sum(i_j * 2**(j-1))."""
    if n < 3:
        raise ValueError(f"decomposition needs n >= 3, got {n}")
    k = (n - 1).bit_length() - 1
    rest = n - 1 - (1 << k)
    return tuple((rest >> (k - 1 - i)) & 1 for i in range(k))


def bits_to_index(bits: Iterable[int]) -> int:
    """Inverse of stern_bits."""
    bits = tuple(bits)
    if not bits:
        raise ValueError("decomposition has at least one bit")
    rest = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"bits must be 0 or 1, got {b!r}")
        rest = rest * 2 + b
    return (1 << len(bits)) + 1 + rest


def _mul2(a: Mat2, b: Mat2) -> Mat2:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


def diatomic_matrix_term(n: int) -> int:
    """Matrix route for n >= 3: bottom-right entry of the seed matrix times
    the step matrices of n's bit decomposition.  Equals diatomic_term(n)."""
    if n < 3:
        raise ValueError(f"matrix route needs n >= 3, got {n}")
    m = SEED_MATRIX
    for bit in stern_bits(n):
        m = _mul2(m, STEP_MATRICES[bit])
    return m[1][1]


def level_row_sum(level: int) -> int:
    """Sum of the row alpha(2**level) ... alpha(2**(level+1)), endpoints
    included; equals 3**level + 1."""
    if level < 0:
        raise ValueError(f"level must be >= 0, got {level}")
    lo, hi = 1 << level, 1 << (level + 1)
    values = diatomic_terms(hi + 1)
    return sum(values[lo : hi + 1])
