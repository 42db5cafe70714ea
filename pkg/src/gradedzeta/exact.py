"""Exact arithmetic core: rational polynomials, weight sequences, Bernoulli data.

Every scalar in this module is a `fractions.Fraction` (lowest terms, positive
denominator), so all results are exact; nothing here ever touches floating
point.  The rest of the package builds on three pieces:

* ``RatPolynomial`` -- dense univariate polynomials over the rationals,
* ``WeightSeq`` -- the generator degrees (a_1, ..., a_r) of a weighted
  polynomial ring together with their lcm,
* Bernoulli numbers and the Bernoulli-Barnes polynomials/numbers attached to
  a weight sequence, which govern the residues of the zeta functions in
  :mod:`gradedzeta.analytic`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, lcm
from typing import Iterable, Iterator, Union

__all__ = [
    "Rational",
    "RatPolynomial",
    "WeightSeq",
    "bernoulli_numbers",
    "sum_powers",
    "bernoulli_barnes_poly",
    "bernoulli_barnes_number",
]

# Exact scalars are plain Fractions; the alias names the role they play here.
Rational = Fraction

Scalar = Union[int, Fraction]


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact scalar, got {type(value).__name__}")


class RatPolynomial:
    """Dense univariate polynomial with rational coefficients.

    Coefficients are stored by ascending exponent with trailing zeros trimmed;
    the zero polynomial stores nothing and has degree -1.  Instances are
    immutable and hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "RatPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "RatPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1) -> "RatPolynomial":
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        return cls([0] * exponent + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, k: int) -> Fraction:
        """Coefficient of x^k (zero outside the stored range)."""
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> "RatPolynomial":
        return RatPolynomial([-c for c in self._coeffs])

    def __add__(self, other: "RatPolynomial") -> "RatPolynomial":
        if not isinstance(other, RatPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPolynomial(out)

    def __sub__(self, other: "RatPolynomial") -> "RatPolynomial":
        if not isinstance(other, RatPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["RatPolynomial", Scalar]) -> "RatPolynomial":
        if isinstance(other, RatPolynomial):
            if self.is_zero or other.is_zero:
                return RatPolynomial()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return RatPolynomial(out)
        if isinstance(other, (int, Fraction)):
            return RatPolynomial([c * other for c in self._coeffs])
        return NotImplemented

    def __rmul__(self, other: Scalar) -> "RatPolynomial":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __call__(self, x):
        """Evaluate by Horner's rule; exact for Fraction/int arguments."""
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RatPolynomial":
        return RatPolynomial([k * c for k, c in enumerate(self._coeffs)][1:])

    def times_power(self, k: int) -> "RatPolynomial":
        """Multiply by x^k."""
        if k < 0:
            raise ValueError("k must be >= 0")
        if self.is_zero:
            return self
        return RatPolynomial((Fraction(0),) * k + self._coeffs)

    def compose_affine(self, a: Scalar, b: Scalar) -> "RatPolynomial":
        """Exact substitution x -> a*x + b."""
        inner = RatPolynomial([b, a])
        acc = RatPolynomial()
        for c in reversed(self._coeffs):
            acc = acc * inner + RatPolynomial([c])
        return acc

    def shift_arg(self, b: Scalar) -> "RatPolynomial":
        """Exact substitution x -> x + b."""
        return self.compose_affine(1, b)

    def div_one_minus_x(self) -> "RatPolynomial":
        """Exact quotient by (1 - x); requires the value at 1 to vanish."""
        if self.is_zero:
            return self
        if sum(self._coeffs) != 0:
            raise ValueError("not divisible by (1 - x)")
        out = []
        run = Fraction(0)
        for c in self._coeffs[:-1]:
            run += c
            out.append(run)
        return RatPolynomial(out)

    def to_text(self, var: str = "t") -> str:
        """Human-readable form such as ``1 - 2*t + t^3``."""
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                body = f"{head}{var}" + ("" if k == 1 else f"^{k}")
            parts.append(("-" if c < 0 else "+", body))
        sign, first = parts[0]
        text = ("-" if sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"RatPolynomial([{', '.join(str(c) for c in self._coeffs)}])"


@dataclass(frozen=True)
class WeightSeq:
    """Generator degrees (a_1, ..., a_r) of a positively graded polynomial ring."""

    weights: tuple[int, ...]

    def __post_init__(self):
        ws = tuple(int(w) for w in self.weights)
        if not ws:
            raise ValueError("at least one weight is required")
        if any(w < 1 for w in ws):
            raise ValueError("weights must be positive integers")
        object.__setattr__(self, "weights", ws)

    @property
    def r(self) -> int:
        return len(self.weights)

    @property
    def D(self) -> int:
        """Common period: lcm of the weights."""
        return lcm(*self.weights)

    @property
    def total(self) -> int:
        return sum(self.weights)

    def __iter__(self) -> Iterator[int]:
        return iter(self.weights)


# ---------------------------------------------------------------------------
# Bernoulli numbers: z/(e^z - 1) = sum B_k z^k / k!, kept as a shared cache.
# The cache is append-only under a lock, so concurrent readers always see a
# consistent prefix.

_BERN_LOCK = threading.Lock()
_BERN: list[Fraction] = [Fraction(1)]
_BERN_SCALED: list[Fraction] = [Fraction(1)]  # B_k / k!


def bernoulli_numbers(n_max: int) -> tuple[Fraction, ...]:
    """Exact Bernoulli numbers B_0..B_{n_max} (convention B_1 = -1/2)."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    with _BERN_LOCK:
        while len(_BERN) <= n_max:
            k = len(_BERN)
            # Invert the series (e^z - 1)/z = sum z^i/(i+1)! term by term.
            c = -sum(_BERN_SCALED[k - i] / factorial(i + 1) for i in range(1, k + 1))
            _BERN_SCALED.append(c)
            _BERN.append(c * factorial(k))
        return tuple(_BERN[: n_max + 1])


def sum_powers(k: int, n: int) -> Fraction:
    """Power sum 1^k + 2^k + ... + n^k from the Bernoulli closed form.

    The B_1 term enters with +1/2 so the formula covers the full range up to
    n (with -1/2 it would stop at n-1).
    """
    if k < 1:
        raise ValueError("defined for k >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    bern = bernoulli_numbers(k)
    total = Fraction(0)
    for ell in range(k + 1):
        b = -bern[1] if ell == 1 else bern[ell]
        total += comb(k + 1, ell) * b * Fraction(n) ** (1 + k - ell)
    return total / (k + 1)


# ---------------------------------------------------------------------------
# Bernoulli-Barnes polynomials and numbers.

def _series_mul(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a):
        if i > order:
            break
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if i + j > order:
                break
            out[i + j] += ai * bj
    return out


def _series_inverse(a: list[Fraction], order: int) -> list[Fraction]:
    if a[0] == 0:
        raise ZeroDivisionError("series with zero constant term has no inverse")
    inv = [Fraction(1) / a[0]]
    for k in range(1, order + 1):
        acc = Fraction(0)
        for i in range(1, min(k, len(a) - 1) + 1):
            acc += a[i] * inv[k - i]
        inv.append(-acc / a[0])
    return inv


def bernoulli_barnes_poly(ell: int, a: WeightSeq) -> RatPolynomial:
    """Bernoulli-Barnes polynomial of degree ``ell`` for the weights ``a``.

    Defined through z^r e^{xz} / prod_i (e^{a_i z} - 1): the polynomial is ell!
    times the z^ell Taylor coefficient.  Computed by exact truncated series
    inversion; the result has degree ``ell`` in x, and for a = (1) it is the
    classical Bernoulli polynomial.
    """
    if ell < 0:
        raise ValueError("ell must be >= 0")
    denom = [Fraction(1)]
    for weight in a:
        factor = [Fraction(weight ** (k + 1), factorial(k + 1)) for k in range(ell + 1)]
        denom = _series_mul(denom, factor, ell)
    inv = _series_inverse(denom, ell)
    coeffs = [Fraction(factorial(ell), factorial(k)) * inv[ell - k] for k in range(ell + 1)]
    return RatPolynomial(coeffs)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def bernoulli_barnes_number(ell: int, a: WeightSeq) -> Fraction:
    """Bernoulli-Barnes number: the degree-``ell`` polynomial evaluated at 0.

    Computed independently of :func:`bernoulli_barnes_poly` through the
    multinomial combination of ordinary Bernoulli numbers, which makes the two
    routes cross-check each other.
    """
    if ell < 0:
        raise ValueError("ell must be >= 0")
    bern = bernoulli_numbers(ell)
    total = Fraction(0)
    for split in _compositions(ell, a.r):
        coeff = Fraction(factorial(ell))
        for part in split:
            coeff /= factorial(part)
        term = coeff
        for part, weight in zip(split, a):
            if bern[part] == 0:
                term = Fraction(0)
                break
            term *= bern[part] * Fraction(weight) ** (part - 1)
        total += term
    return total
