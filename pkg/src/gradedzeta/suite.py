"""Deterministic catalog of series used by the check suites and tests.

Covers free modules over several weight systems, degree shifts, regular
quotients (hypersurfaces and complete intersections), modules given by Betti
tables, and two formal sequences chosen to exercise residue corner cases
(H(n) = 2n + 3 separates the correct residue index from the tempting wrong
one; H(n) = 2n has a vanishing constant-term residue).
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import RatPolynomial, WeightSeq
from .hilbert import (
    BettiTable,
    HilbertSeries,
    betti_from_numerator,
    dimension,
    free_series,
    regular_quotient,
    series_from_betti,
    shift,
)

__all__ = ["SuiteItem", "standard_suite", "standard_graded_suite", "weighted_hypersurface_series"]


@dataclass(frozen=True)
class SuiteItem:
    name: str
    series: HilbertSeries
    betti: BettiTable


def weighted_hypersurface_series() -> HilbertSeries:
    """Weights (2, 3) with one degree-6 relation: H = 1, 0, 1, 1, 1, ..."""
    return regular_quotient(free_series(WeightSeq((2, 3))), 6)


def standard_suite() -> tuple[SuiteItem, ...]:
    items: list[SuiteItem] = []

    def add(name: str, series: HilbertSeries, betti: BettiTable | None = None):
        if betti is None:
            betti = betti_from_numerator(series.numerator)
        items.append(SuiteItem(name, series, betti))

    for ws in [(1,), (1, 1), (1, 1, 1), (1, 1, 1, 1), (2, 3), (1, 2), (1, 2, 4), (2, 2, 3), (3, 5)]:
        add(f"free{ws}", free_series(WeightSeq(ws)))

    add("free(2,3) shifted by 3", shift(free_series(WeightSeq((2, 3))), 3))
    add("free(1,1) shifted by 2", shift(free_series(WeightSeq((1, 1))), 2))
    add("free(1,2,4) shifted by 1", shift(free_series(WeightSeq((1, 2, 4))), 1))

    add(
        "weighted (2,3) hypersurface deg 6",
        weighted_hypersurface_series(),
        BettiTable(((0, 0, 1), (1, 6, 1))),
    )
    for d in range(2, 9):
        add(f"plane curve deg {d}", regular_quotient(free_series(WeightSeq((1, 1))), d))
    add(
        "ci(2,3) in three variables",
        regular_quotient(regular_quotient(free_series(WeightSeq((1, 1, 1))), 2), 3),
    )
    add(
        "artinian koszul pair over (2,3)",
        series_from_betti(WeightSeq((2, 3)), BettiTable(((0, 0, 1), (1, 6, 2), (2, 12, 1)))),
        BettiTable(((0, 0, 1), (1, 6, 2), (2, 12, 1))),
    )
    add(
        "two generators one relation over (1,2)",
        series_from_betti(WeightSeq((1, 2)), BettiTable(((0, 0, 2), (1, 3, 1)))),
        BettiTable(((0, 0, 2), (1, 3, 1))),
    )

    add("formal H = 2n + 3", HilbertSeries(WeightSeq((1, 1)), RatPolynomial([3, -1])))
    add("formal H = 2n", HilbertSeries(WeightSeq((1, 1)), RatPolynomial([0, 2])))

    return tuple(items)


def standard_graded_suite() -> tuple[SuiteItem, ...]:
    """Suite members over unit weights with positive dimension."""
    return tuple(
        item
        for item in standard_suite()
        if all(w == 1 for w in item.series.weights) and dimension(item.series) >= 1
    )
