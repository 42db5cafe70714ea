"""Cross-formula identity harness.

Three independent pipelines meet here: the pure-resolution multiplicity
identity (Betti ranks from degree data vs the residue at the top pole), the
complete-intersection truncation identity (a finite coefficient sum vs an
alternating combination of free-module zeta values), and the Hilbert-Samuel
multiplicity recovered from the residue of the once-iterated zeta function.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod
from typing import Sequence

from .exact import RatPolynomial, WeightSeq, bernoulli_barnes_poly
from .hilbert import (
    HilbertSeries,
    bounded_denumerant,
    dimension,
    free_series,
)
from .analytic import (
    DEFAULT_CONFIG,
    EvalConfig,
    iterated_residues_limit,
    residues_from_resolution,
    zeta_closed,
)

__all__ = [
    "NonIntegralBettiWarning",
    "PureResolutionSpec",
    "PureIdentityReport",
    "SamuelInput",
    "pure_betti",
    "check_pure_identity",
    "check_ci_identity",
    "default_z_samples",
    "samuel_multiplicity",
]


class NonIntegralBettiWarning(UserWarning):
    """The rank formula produced values that are not positive integers."""


@dataclass(frozen=True)
class PureResolutionSpec:
    """Shape data of a pure free resolution: r variables, dimension m, degrees."""

    r: int
    m: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if self.m < 1 or self.r <= self.m:
            raise ValueError("need r > m >= 1")
        if len(self.degrees) != self.p:
            raise ValueError("expected r - m degrees")
        if any(d < 1 for d in self.degrees):
            raise ValueError("degrees must be positive")
        if any(a >= b for a, b in zip(self.degrees, self.degrees[1:])) or len(
            set(self.degrees)
        ) != len(self.degrees):
            raise ValueError("degrees must be strictly increasing")

    @property
    def p(self) -> int:
        return self.r - self.m


def pure_betti(spec: PureResolutionSpec) -> tuple[Fraction, ...]:
    """Ranks beta_i = (-1)^{i+1} prod_{j != i} d_j/(d_j - d_i), i = 1..p.

    For genuine Cohen-Macaulay modules these are positive integers; a warning
    is emitted when the degree data yields something else.
    """
    d = spec.degrees
    betas = []
    for i in range(1, spec.p + 1):
        value = Fraction((-1) ** (i + 1))
        for j in range(1, spec.p + 1):
            if j != i:
                value *= Fraction(d[j - 1], d[j - 1] - d[i - 1])
        betas.append(value)
    if any(b <= 0 or b.denominator != 1 for b in betas):
        warnings.warn(
            "rank formula gave non positive-integer values: no Cohen-Macaulay "
            "module has this pure resolution type",
            NonIntegralBettiWarning,
            stacklevel=2,
        )
    return tuple(betas)


@dataclass(frozen=True)
class PureIdentityReport:
    """Outcome of the pure-resolution multiplicity identity for one spec."""

    spec: PureResolutionSpec
    multiplicity: Fraction          # d_1 ... d_p / p!
    residue_route: Fraction         # (m-1)! * R(m) from the resolution residues
    robust_equal: bool
    literal_lhs: Fraction           # displayed alternating sum, d_0 = 0 convention
    literal_rhs: Fraction           # (m-1)! (-1)^p d_1 ... d_p
    literal_equal: bool


def check_pure_identity(spec: PureResolutionSpec) -> PureIdentityReport:
    """Evaluate the pure-resolution multiplicity identity both ways.

    Robust route: residues of the resolution with ranks from
    :func:`pure_betti` (plus the rank-one degree-0 head) give the residue at
    the top pole m, and (m-1)! times it must equal d_1...d_p/p! -- an exact
    rational identity.  The commonly displayed alternating sum (evaluated
    literally with the d_0 = 0 convention) is reported alongside; it does not
    match the robust route in general and is flagged rather than trusted.
    """
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonIntegralBettiWarning)
        betas = pure_betti(spec)
    d = spec.degrees
    p = spec.p
    unit = WeightSeq((1,) * spec.r)

    entries = ((0, 0, Fraction(1)),) + tuple(
        (i, d[i - 1], betas[i - 1]) for i in range(1, p + 1)
    )
    table = residues_from_resolution(unit, entries)
    residue_route = factorial(spec.m - 1) * table.poly(spec.m)(Fraction(0))
    multiplicity = Fraction(prod(d), factorial(p))

    barnes = bernoulli_barnes_poly(p, unit)
    literal_lhs = Fraction(0)
    for i in range(p + 1):
        di = 0 if i == 0 else d[i - 1]
        product = Fraction(1)
        for j in range(1, p + 1):
            if j != i:
                product *= Fraction(d[j - 1], d[j - 1] - di)
        literal_lhs += Fraction((-1) ** (i + 1)) * product * barnes(Fraction(di))
    literal_rhs = Fraction(factorial(spec.m - 1) * (-1) ** p * prod(d))

    return PureIdentityReport(
        spec=spec,
        multiplicity=multiplicity,
        residue_route=residue_route,
        robust_equal=residue_route == multiplicity,
        literal_lhs=literal_lhs,
        literal_rhs=literal_rhs,
        literal_equal=literal_lhs == literal_rhs,
    )


def default_z_samples(max_pole: int) -> list[complex]:
    """Evaluation grid over Re in [-2, 4] dodging the real poles 1..max_pole."""
    samples = []
    for re2 in range(-4, 9):
        re = re2 / 2.0
        on_pole = re == int(re) and 1 <= re <= max_pole
        if not on_pole:
            samples.append(complex(re, 0.0))
        samples.append(complex(re, 1.3))
    return samples


def check_ci_identity(
    a: WeightSeq,
    w: float,
    z_samples: Sequence[complex],
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> float:
    """Max deviation of the bounded-denumerant truncation identity.

    Left side: the finite sum over the bounded denumerant coefficients; right
    side: sum_{j=0}^r (-1)^j C(r, j) zeta(free series)(z, w + D*j).  Returns
    the maximum absolute difference over the samples.
    """
    w = float(w)
    if w <= 0:
        raise ValueError("w must be positive")
    r = a.r
    D = a.D
    top = D * r - a.total
    f_values = [bounded_denumerant(a, n) for n in range(top + 1)]
    free = free_series(a)
    worst = 0.0
    for z in z_samples:
        z = complex(z)
        lhs = sum((f * (n + w) ** (-z) for n, f in enumerate(f_values) if f), 0j)
        rhs = 0j
        for j in range(r + 1):
            sign = -1 if j % 2 else 1
            rhs += sign * comb(r, j) * zeta_closed(free, z, w + D * j, cfg)
        worst = max(worst, abs(lhs - rhs))
    return worst


@dataclass(frozen=True)
class SamuelInput:
    """Hilbert data of the associated graded module (standard graded)."""

    hilbert_of_graded: HilbertSeries


def samuel_multiplicity(source: SamuelInput | HilbertSeries) -> Fraction:
    """Multiplicity from the residue of the once-iterated zeta function.

    m! times the residue at z = m + 1 of the limit zeta function of the
    partial-sum series; exact, and equal to the ordinary multiplicity in the
    standard graded case.
    """
    series = (
        source.hilbert_of_graded if isinstance(source, SamuelInput) else source
    )
    m = dimension(series)
    if m == 0:
        raise ValueError("dimension must be >= 1")
    table = iterated_residues_limit(series, 1)
    return factorial(m) * table.poly(m + 1)(Fraction(0))
