"""Matrix route to the sequence, and its generating series.

Triples evolve by right multiplication with one of three 3x3 digit matrices.
Stacking the three homogeneous corner vectors as columns of the vertex
matrix turns a digit string into the product V * M(d1) * ... * M(dn): the
bottom row is the triple of the string and the columns span its cone.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .sequence import Triple

Mat3 = tuple[tuple[int, ...], ...]

DIGIT_MATRICES: tuple[Mat3, Mat3, Mat3] = (
    ((1, 0, 1), (0, 1, 1), (0, 0, 1)),
    ((0, 0, 1), (1, 0, 1), (0, 1, 1)),
    ((0, 1, 1), (0, 0, 1), (1, 0, 1)),
)

# Columns are the corner vectors (0,0,1), (1,0,1), (1,1,1); the bottom row
# is the unit seed.
VERTEX_MATRIX: Mat3 = ((0, 1, 1), (0, 0, 1), (1, 1, 1))

IDENTITY: Mat3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def digit_matrix(digit: int) -> Mat3:
    """The 3x3 matrix of one subdivision step."""
    if digit not in (0, 1, 2):
        raise ValueError(f"digit must be 0, 1 or 2, got {digit!r}")
    return DIGIT_MATRICES[digit]


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def det(m: Mat3) -> int:
    """Determinant of a 3x3 integer matrix."""
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def product_over(digits: Iterable[int]) -> Mat3:
    """The vertex matrix times the digit matrices, in application order."""
    m = VERTEX_MATRIX
    for d in digits:
        m = mat_mul(m, digit_matrix(d))
    return m


def bottom_row(digits: Iterable[int]) -> Triple:
    """Bottom row of product_over: the unit-seed triple of the digit string."""
    return Triple(*product_over(digits)[2])


class IntSeries:
    """Truncated integer power series.

    Coefficients are exact below ``order``; every operation discards
    exponents at or beyond it.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence[int], order: int):
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        kept = list(coeffs[:order])
        while kept and kept[-1] == 0:
            kept.pop()
        self.coeffs = kept
        self.order = order

    def coeff(self, exponent: int) -> int:
        if not 0 <= exponent < self.order:
            raise IndexError(f"exponent {exponent} outside truncation order {self.order}")
        return self.coeffs[exponent] if exponent < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, tuple(self.coeffs)))

    def __repr__(self) -> str:
        return f"IntSeries({self.coeffs!r}, order={self.order})"

    def __add__(self, other: "IntSeries") -> "IntSeries":
        order = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a[:order])
        for i in range(min(len(b), order)):
            out[i] += b[i]
        return IntSeries(out, order)

    def __mul__(self, other: "IntSeries") -> "IntSeries":
        order = min(self.order, other.order)
        if not self.coeffs or not other.coeffs:
            return IntSeries([], order)
        out = [0] * min(order, len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0 or i >= order:
                continue
            for j in range(min(len(other.coeffs), order - i)):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return IntSeries(out, order)

    def shift(self, k: int) -> "IntSeries":
        """Multiply by x**k."""
        if k < 0:
            raise ValueError(f"shift must be >= 0, got {k}")
        return IntSeries([0] * k + self.coeffs, self.order)

    def compose_xpow(self, m: int) -> "IntSeries":
        """Substitute x -> x**m."""
        if m < 1:
            raise ValueError(f"power must be >= 1, got {m}")
        out = [0] * min(self.order, (len(self.coeffs) - 1) * m + 1 if self.coeffs else 0)
        for i, c in enumerate(self.coeffs):
            if c and i * m < self.order:
                out[i * m] = c
        return IntSeries(out, self.order)


SeriesMat = tuple[tuple[IntSeries, ...], ...]


def _digit_polynomial_matrix(order: int) -> SeriesMat:
    # entry (i, j) is M0[i][j] + M1[i][j] x + M2[i][j] x**2
    m0, m1, m2 = DIGIT_MATRICES
    return tuple(
        tuple(IntSeries([m0[i][j], m1[i][j], m2[i][j]], order) for j in range(3))
        for i in range(3)
    )


def _series_mat_mul(a: SeriesMat, b: SeriesMat) -> SeriesMat:
    return tuple(
        tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j] for j in range(3))
        for i in range(3)
    )


def series_coefficients(max_exponent: int) -> IntSeries:
    """Generating series of the sequence, truncated after x**max_exponent.

    Level k contributes the block x**((3**(k+1)-3)/2) * P(x**3**k) * ... *
    P(x**3) where P(x) is the digit-matrix polynomial; blocks are multiplied
    right to left and accumulated until one starts beyond max_exponent.  The
    coefficient of x**N is the sequence value at N for every N in range.
    """
    if max_exponent < 1:
        raise ValueError(f"max_exponent must be >= 1, got {max_exponent}")
    order = max_exponent + 1
    row = VERTEX_MATRIX[2]  # bottom row: picks the triple out of each block
    total = [0] * order

    for j in range(3):
        if j + 1 <= max_exponent:
            total[j + 1] += row[j]

    base = _digit_polynomial_matrix(order)
    block: SeriesMat | None = None
    k = 1
    while True:
        start = (3 ** (k + 1) - 3) // 2 + 1  # first index of level k
        if start > max_exponent:
            break
        factor = tuple(
            tuple(entry.compose_xpow(3**k) for entry in base_row) for base_row in base
        )
        block = factor if block is None else _series_mat_mul(factor, block)
        for j in range(3):
            for i in range(3):
                weight = row[i]
                if not weight:
                    continue
                for exponent, c in enumerate(block[i][j].coeffs):
                    n = exponent + start + j
                    if c and n <= max_exponent:
                        total[n] += weight * c
        k += 1

    return IntSeries(total, order)
