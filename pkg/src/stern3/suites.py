"""Named verification suites behind the command line.

Each suite returns a list of independent checks; run_suite wraps them in
the machine-readable report the CLI emits.  Randomized checks draw from a
fixed seed so reports are reproducible run to run.
"""

from __future__ import annotations

import random
from typing import Callable

from . import analytics, matrices, sequence, subgraph
from .analytics import Check
from .indexing import decode, level_range

RNG_SEED = 0x5732
RANDOM_INDEX_CEILING = 3**12
RANDOM_INDEX_SAMPLES = 1000


def suite_symmetry(max_level: int, depth: int | None, max_n: int | None) -> list[Check]:
    return [
        Check(f"level {n}: the three thirds are identical", analytics.verify_threefold(n))
        for n in range(1, max_level + 1)
    ]


def suite_sums(max_level: int, depth: int | None, max_n: int | None) -> list[Check]:
    checks = []
    for n in range(max_level + 1):
        got, want = analytics.level_sum(n), 3 * 5**n
        checks.append(
            Check(
                f"level {n} sums to 3*5^{n}",
                got == want,
                None if got == want else f"sum is {got}, expected {want}",
            )
        )
    return checks


def suite_tribonacci(max_level: int, depth: int | None, max_n: int | None) -> list[Check]:
    standard = analytics.tribonacci_subsequence((), 11)
    expected = [1, 1, 1, 3, 5, 9, 17, 31, 57, 105, 193]
    checks = [
        Check(
            "standard tribonacci subsequence from the empty string",
            standard == expected,
            None if standard == expected else f"got {standard}",
        )
    ]
    rng = random.Random(RNG_SEED)
    bad = None
    for _ in range(100):
        digits = tuple(rng.randrange(3) for _ in range(rng.randrange(7)))
        values = analytics.tribonacci_subsequence(digits, 12)
        for i in range(len(values) - 3):
            if values[i + 3] != values[i] + values[i + 1] + values[i + 2]:
                bad = f"digits {digits}: {values}"
                break
        if bad:
            break
    checks.append(
        Check("recurrence holds on 100 random starting strings", bad is None, bad)
    )
    return checks


def suite_delta(max_level: int, depth: int | None, max_n: int | None) -> list[Check]:
    return analytics.verify_delta_identities(max(max_level, 2))


def suite_graph(max_level: int, depth: int | None, max_n: int | None) -> list[Check]:
    depth = max_level if depth is None else depth
    g = subgraph.build(depth)
    checks = []

    bad = None
    for n in range(1, level_range(depth)[1] + 1):
        if g.path_count(n) != sequence.term(n):
            bad = f"index {n}: {g.path_count(n)} paths, term {sequence.term(n)}"
            break
    checks.append(
        Check(f"path counts equal sequence values through depth {depth}", bad is None, bad)
    )

    bad = next(
        (
            f"vertex {v} has in-degree {len(g.in_neighbors(v))}"
            for v in g.vertices()
            if v not in subgraph.CORNERS and len(g.in_neighbors(v)) != 3
        ),
        None,
    )
    checks.append(Check("every non-initial vertex has in-degree 3", bad is None, bad))

    brute_depth = min(depth, 3)
    small = subgraph.build(brute_depth)
    bad = None
    for n in range(1, level_range(brute_depth)[1] + 1):
        if subgraph.count_paths_brute(small, n) != small.path_count(n):
            bad = f"index {n}"
            break
    checks.append(
        Check(
            f"brute-force enumeration equals the recurrence through depth {brute_depth}",
            bad is None,
            bad,
        )
    )
    return checks


def suite_series(max_level: int, depth: int | None, max_n: int | None) -> list[Check]:
    if max_n is None:
        max_n = level_range(min(max_level, 4))[1]
    coeffs = matrices.series_coefficients(max_n)
    bad = next(
        (
            f"x^{n}: series {coeffs.coeff(n)}, term {sequence.term(n)}"
            for n in range(1, max_n + 1)
            if coeffs.coeff(n) != sequence.term(n)
        ),
        None,
    )
    return [
        Check(f"series coefficients match the recursion for N <= {max_n}", bad is None, bad)
    ]


def suite_matrix(max_level: int, depth: int | None, max_n: int | None) -> list[Check]:
    limit = 3**max_level
    bad = None
    for n in range(1, limit + 1):
        digits, pos = decode(n)
        if matrices.bottom_row(digits)[pos - 1] != sequence.term(n):
            bad = f"index {n}"
            break
    checks = [
        Check(f"matrix route equals the recursion for all N <= 3^{max_level}", bad is None, bad)
    ]

    rng = random.Random(RNG_SEED)
    bad = None
    for _ in range(RANDOM_INDEX_SAMPLES):
        n = rng.randrange(1, RANDOM_INDEX_CEILING + 1)
        digits, pos = decode(n)
        if matrices.bottom_row(digits)[pos - 1] != sequence.term(n):
            bad = f"index {n}"
            break
    checks.append(
        Check(
            f"matrix route equals the recursion on {RANDOM_INDEX_SAMPLES} random N <= 3^12",
            bad is None,
            bad,
        )
    )
    return checks


SUITES: dict[str, Callable[[int, int | None, int | None], list[Check]]] = {
    "symmetry": suite_symmetry,
    "sums": suite_sums,
    "tribonacci": suite_tribonacci,
    "delta": suite_delta,
    "graph": suite_graph,
    "series": suite_series,
    "matrix": suite_matrix,
}


def run_suite(
    name: str, max_level: int, depth: int | None = None, max_n: int | None = None
) -> dict:
    """Run a named suite (or "all") and wrap it in the report schema:
    {"suite", "max_level", "checks": [{"name", "pass", "counterexample"}]}."""
    if name == "all":
        checks = []
        for suite_name, fn in SUITES.items():
            checks.extend(
                Check(f"{suite_name}: {c.name}", c.passed, c.counterexample)
                for c in fn(max_level, depth, max_n)
            )
    elif name in SUITES:
        checks = SUITES[name](max_level, depth, max_n)
    else:
        raise KeyError(name)
    return {
        "suite": name,
        "max_level": max_level,
        "checks": [
            {"name": c.name, "pass": c.passed, "counterexample": c.counterexample}
            for c in checks
        ],
    }
