"""Exact Hilbert series algebra for finitely generated graded modules.

A series is a pair (weights, numerator) representing the rational function
numerator(t) / prod_i (1 - t^{a_i}).  Everything at the coefficient level is
exact integer/rational arithmetic: expansion, dimension, quasi-polynomial
extraction with its stabilization index, multiplicity and Hilbert
coefficients, and the restricted partition counts that appear as the
coefficients of free modules.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import NamedTuple

from .exact import RatPolynomial, WeightSeq

__all__ = [
    "ModuleSeriesWarning",
    "BettiTable",
    "HilbertSeries",
    "QuasiPolynomial",
    "MultiplicityData",
    "free_series",
    "series_from_betti",
    "betti_from_numerator",
    "expand",
    "validate",
    "dimension",
    "a_invariant",
    "quasi_polynomial",
    "shift",
    "regular_quotient",
    "direct_sum",
    "iterate",
    "hilbert_polynomial",
    "multiplicity",
    "restricted_partition",
    "bounded_denumerant",
]


class ModuleSeriesWarning(UserWarning):
    """A coefficient of the expansion is negative: not a module's series."""


@dataclass(frozen=True)
class BettiTable:
    """Sparse table of graded Betti numbers beta_{ij} (all entries positive)."""

    entries: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        norm = tuple((int(i), int(j), int(b)) for i, j, b in self.entries)
        seen = set()
        for i, j, b in norm:
            if i < 0 or j < 0:
                raise ValueError("homological and internal degrees must be >= 0")
            if b < 1:
                raise ValueError("Betti numbers must be >= 1")
            if (i, j) in seen:
                raise ValueError(f"duplicate Betti position ({i}, {j})")
            seen.add((i, j))
        object.__setattr__(self, "entries", norm)

    @property
    def p(self) -> int:
        """Largest homological degree present."""
        return max(i for i, _, _ in self.entries)


@dataclass(frozen=True)
class HilbertSeries:
    """The rational function numerator(t) / prod_i (1 - t^{a_i})."""

    weights: WeightSeq
    numerator: RatPolynomial

    def __post_init__(self):
        if not isinstance(self.weights, WeightSeq):
            object.__setattr__(self, "weights", WeightSeq(tuple(self.weights)))
        if not isinstance(self.numerator, RatPolynomial):
            object.__setattr__(self, "numerator", RatPolynomial(self.numerator))
        if not self.numerator.has_integer_coeffs():
            raise ValueError("numerator must have integer coefficients")


@dataclass(frozen=True)
class QuasiPolynomial:
    """Eventual coefficient law of a series: H(n) = sum_k d[k][n mod D] n^k.

    ``degree`` is -1 for the identically-zero quasi-polynomial; ``alpha`` is
    the least index from which the law reproduces every coefficient.
    """

    period: int
    degree: int
    coeffs: tuple[tuple[Fraction, ...], ...]
    alpha: int

    def coefficient(self, k: int, n: int) -> Fraction:
        """d_k evaluated on the residue class of n."""
        return self.coeffs[k][n % self.period]

    def __call__(self, n: int) -> Fraction:
        total = Fraction(0)
        for k in range(self.degree + 1):
            total += self.coeffs[k][n % self.period] * n**k
        return total


class MultiplicityData(NamedTuple):
    e: Fraction
    coefficients: tuple[Fraction, ...]


def free_series(weights: WeightSeq) -> HilbertSeries:
    """Series of the weighted polynomial ring itself (numerator 1)."""
    return HilbertSeries(weights, RatPolynomial.one())


def series_from_betti(weights: WeightSeq, betti: BettiTable) -> HilbertSeries:
    """Numerator sum_i (-1)^i sum_j beta_{ij} t^j from a free resolution."""
    top = max(j for _, j, _ in betti.entries)
    coeffs = [0] * (top + 1)
    for i, j, beta in betti.entries:
        coeffs[j] += beta if i % 2 == 0 else -beta
    return HilbertSeries(weights, RatPolynomial(coeffs))


def betti_from_numerator(numerator: RatPolynomial) -> BettiTable:
    """Formal Betti table whose alternating sum reproduces an integer numerator.

    Positive coefficients land in homological degree 0, negative ones in
    degree 1; any formula that only consumes (-1)^i beta_{ij} sees exactly the
    numerator it came from.
    """
    if numerator.is_zero:
        raise ValueError("zero numerator has no Betti table")
    if not numerator.has_integer_coeffs():
        raise ValueError("integer numerator required")
    entries = []
    for j, c in enumerate(numerator.coeffs):
        if c > 0:
            entries.append((0, j, int(c)))
        elif c < 0:
            entries.append((1, j, int(-c)))
    return BettiTable(tuple(entries))


@lru_cache(maxsize=None)
def _expand_core(series: HilbertSeries, n_max: int) -> tuple[int, ...]:
    coeffs = [0] * (n_max + 1)
    for k in range(min(series.numerator.degree, n_max) + 1):
        coeffs[k] = int(series.numerator.coeff(k))
    # Multiplying by 1/(1 - t^a) is a running sum with stride a.
    for a in series.weights:
        for n in range(a, n_max + 1):
            coeffs[n] += coeffs[n - a]
    return tuple(coeffs)


def expand(series: HilbertSeries, n_max: int) -> list[int]:
    """Exact expansion coefficients H(0), ..., H(n_max).

    Emits :class:`ModuleSeriesWarning` (non-fatal) when a coefficient is
    negative, since no module realizes such a series; all the analytic
    machinery still applies to the formal sequence.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    values = _expand_core(series, n_max)
    if any(v < 0 for v in values):
        warnings.warn(
            "negative expansion coefficient: not the Hilbert series of a module",
            ModuleSeriesWarning,
            stacklevel=2,
        )
    return list(values)


def validate(series: HilbertSeries, n_max: int = 0) -> bool:
    """True iff all coefficients up to max(n_max, E+1) are nonnegative.

    E = deg(numerator) - sum of weights bounds the degree of the polynomial
    part, so nonnegativity up to E+1 together with the eventual
    quasi-polynomial law covers the whole series in practice.
    """
    if series.numerator.is_zero:
        return True
    bound = max(n_max, a_invariant(series) + 1, 0)
    return all(v >= 0 for v in _expand_core(series, bound))


def _strip_unit_factors(numerator: RatPolynomial) -> tuple[RatPolynomial, int]:
    """Divide out (1 - t) as often as possible; returns (reduced, multiplicity)."""
    if numerator.is_zero:
        raise ValueError("zero module")
    mult = 0
    p = numerator
    while p(Fraction(1)) == 0:
        p = p.div_one_minus_x()
        mult += 1
    return p, mult


def dimension(series: HilbertSeries) -> int:
    """Pole order of the series at t = 1 after exact cancellation."""
    _, mult = _strip_unit_factors(series.numerator)
    return max(0, series.weights.r - mult)


def a_invariant(series: HilbertSeries) -> int:
    """Degree of the series as a rational function of t."""
    if series.numerator.is_zero:
        raise ValueError("zero module")
    return series.numerator.degree - series.weights.total


def _lagrange(points: list[tuple[Fraction, Fraction]]) -> RatPolynomial:
    total = RatPolynomial.zero()
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        num = RatPolynomial.one()
        denom = Fraction(1)
        for k, (xk, _) in enumerate(points):
            if k == i:
                continue
            num = num * RatPolynomial([-xk, 1])
            denom *= xi - xk
        total = total + num * (yi / denom)
    return total


@lru_cache(maxsize=None)
def quasi_polynomial(series: HilbertSeries) -> QuasiPolynomial:
    """Exact quasi-polynomial data of a series, with its stabilization index.

    For each residue class j mod D the subsequence H(j + tD) is a polynomial
    in t of degree < r once j + tD exceeds E = deg(numerator) - sum(weights)
    (r bounds the pole order at every root of unity), so r consecutive
    samples beyond E determine it; exact Lagrange interpolation in t followed
    by the affine substitution t = (n - j)/D yields the coefficients d_k(j).
    The index alpha is then found by scanning downward from E+1, comparing
    exact integers.
    """
    if series.numerator.is_zero:
        raise ValueError("zero module")
    D = series.weights.D
    r = series.weights.r
    E = a_invariant(series)
    starts = [max(0, (E - j) // D + 1) for j in range(D)]
    n_hi = max(j + (t0 + r - 1) * D for j, t0 in enumerate(starts))
    values = _expand_core(series, max(n_hi, E + 1, 0))

    per_class = []
    for j in range(D):
        t0 = starts[j]
        points = [
            (Fraction(t0 + s), Fraction(values[j + (t0 + s) * D])) for s in range(r)
        ]
        poly_t = _lagrange(points)
        per_class.append(poly_t.compose_affine(Fraction(1, D), Fraction(-j, D)))

    degree = max((p.degree for p in per_class), default=-1)
    rows = tuple(tuple(p.coeff(k) for p in per_class) for k in range(degree + 1))

    def law(n: int) -> Fraction:
        total = Fraction(0)
        for k in range(degree + 1):
            total += rows[k][n % D] * n**k
        return total

    alpha = max(0, E + 1)
    for n in range(alpha - 1, -1, -1):
        if law(n) == values[n]:
            alpha = n
        else:
            break
    return QuasiPolynomial(D, degree, rows, alpha)


def shift(series: HilbertSeries, k: int) -> HilbertSeries:
    """Series of the module with degrees shifted up by k (numerator times t^k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return HilbertSeries(series.weights, series.numerator.times_power(k))


def regular_quotient(series: HilbertSeries, k: int) -> HilbertSeries:
    """Series after quotienting by a regular element of degree k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    numerator = series.numerator - series.numerator.times_power(k)
    return HilbertSeries(series.weights, numerator)


def direct_sum(s1: HilbertSeries, s2: HilbertSeries) -> HilbertSeries:
    if s1.weights != s2.weights:
        raise ValueError("weight mismatch in direct sum")
    return HilbertSeries(s1.weights, s1.numerator + s2.numerator)


def iterate(series: HilbertSeries, i: int) -> HilbertSeries:
    """Series of the i-fold partial-sum sequence (denominator gains (1-t)^i)."""
    if i < 1:
        raise ValueError("i must be >= 1")
    return HilbertSeries(
        WeightSeq(series.weights.weights + (1,) * i), series.numerator
    )


def hilbert_polynomial(series: HilbertSeries) -> tuple[Fraction, ...]:
    """Coefficients of the eventual polynomial law in the standard graded case."""
    if any(w != 1 for w in series.weights):
        raise ValueError("standard graded only")
    if dimension(series) == 0:
        return ()
    qp = quasi_polynomial(series)
    return tuple(row[0] for row in qp.coeffs)


def multiplicity(series: HilbertSeries) -> MultiplicityData:
    """Multiplicity e = h(1) and Hilbert coefficients e_k = h^(k)(1)/k!.

    h is the numerator after cancelling all (1 - t) factors, so the series is
    h(t)/(1-t)^m with h(1) != 0; requires the standard grading and m >= 1.
    """
    if any(w != 1 for w in series.weights):
        raise ValueError("standard graded only")
    m = dimension(series)
    if m == 0:
        raise ValueError("multiplicity defined here for dim >= 1")
    h, _ = _strip_unit_factors(series.numerator)
    coefficients = []
    deriv = h
    for k in range(m):
        coefficients.append(deriv(Fraction(1)) / factorial(k))
        deriv = deriv.derivative()
    return MultiplicityData(coefficients[0], tuple(coefficients))


def restricted_partition(a: WeightSeq, n: int) -> int:
    """Number of ways to write n as a nonnegative combination of the weights."""
    if n < 0:
        raise ValueError("n must be >= 0")
    ways = [0] * (n + 1)
    ways[0] = 1
    for coin in a:
        for v in range(coin, n + 1):
            ways[v] += ways[v - coin]
    return ways[n]


def bounded_denumerant(a: WeightSeq, n: int) -> int:
    """Solutions of sum a_i x_i = n with each x_i in 0..D/a_i - 1.

    Equals the t^n coefficient of prod_i (1 + t^{a_i} + ... + t^{a_i (D/a_i - 1)}),
    a reciprocal polynomial of degree D*r - sum(a_i).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    D = a.D
    poly = [1]
    for coin in a:
        reps = D // coin
        new = [0] * (len(poly) + coin * (reps - 1))
        for idx, c in enumerate(poly):
            if c:
                for s in range(reps):
                    new[idx + coin * s] += c
        poly = new
    return poly[n] if n < len(poly) else 0
