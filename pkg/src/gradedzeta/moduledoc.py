"""JSON module descriptions and result documents for the command line.

A module description carries the weights plus exactly one of ``numerator``
(integer coefficients by ascending exponent) or ``betti`` (a list of
``[i, j, beta]`` triples), and optional transforms applied in this order:
``shift``, then each degree in ``regular_degrees``, then ``iterate``.  Exact
values in result documents are strings that round-trip through
``fractions.Fraction``.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .exact import RatPolynomial, WeightSeq
from .hilbert import (
    BettiTable,
    HilbertSeries,
    betti_from_numerator,
    iterate,
    regular_quotient,
    series_from_betti,
    shift,
)

__all__ = [
    "ModuleSpecDoc",
    "SpecDocError",
    "parse_module_doc",
    "load_module_doc",
    "build_series",
    "fraction_str",
    "parse_fraction",
    "poly_doc",
    "complex_doc",
]


class SpecDocError(ValueError):
    """The input document is malformed."""


@dataclass(frozen=True)
class ModuleSpecDoc:
    weights: tuple[int, ...]
    numerator: tuple[int, ...] | None = None
    betti: tuple[tuple[int, int, int], ...] | None = None
    shift: int = 0
    regular_degrees: tuple[int, ...] = ()
    iterate: int = 0

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"weights": list(self.weights)}
        if self.numerator is not None:
            out["numerator"] = list(self.numerator)
        if self.betti is not None:
            out["betti"] = [list(entry) for entry in self.betti]
        if self.shift:
            out["shift"] = self.shift
        if self.regular_degrees:
            out["regular_degrees"] = list(self.regular_degrees)
        if self.iterate:
            out["iterate"] = self.iterate
        return out


def _int_list(value: Any, label: str, minimum: int | None = None) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(isinstance(v, int) for v in value):
        raise SpecDocError(f"{label} must be a list of integers")
    if minimum is not None and any(v < minimum for v in value):
        raise SpecDocError(f"{label} entries must be >= {minimum}")
    return tuple(value)


def parse_module_doc(data: Any) -> ModuleSpecDoc:
    if not isinstance(data, dict):
        raise SpecDocError("module description must be a JSON object")
    unknown = set(data) - {"weights", "numerator", "betti", "shift", "regular_degrees", "iterate"}
    if unknown:
        raise SpecDocError(f"unknown fields: {sorted(unknown)}")
    if "weights" not in data:
        raise SpecDocError("missing field 'weights'")
    weights = _int_list(data["weights"], "weights", minimum=1)

    has_num = "numerator" in data
    has_betti = "betti" in data
    if has_num == has_betti:
        raise SpecDocError("exactly one of 'numerator' or 'betti' is required")

    numerator = _int_list(data["numerator"], "numerator") if has_num else None
    betti = None
    if has_betti:
        raw = data["betti"]
        if not isinstance(raw, list):
            raise SpecDocError("betti must be a list of [i, j, beta] triples")
        triples = []
        for entry in raw:
            if (
                not isinstance(entry, list)
                or len(entry) != 3
                or not all(isinstance(v, int) for v in entry)
            ):
                raise SpecDocError("betti entries must be integer triples [i, j, beta]")
            triples.append(tuple(entry))
        betti = tuple(triples)

    shift_k = data.get("shift", 0)
    if not isinstance(shift_k, int) or shift_k < 0:
        raise SpecDocError("shift must be a nonnegative integer")
    regular = _int_list(data.get("regular_degrees", []), "regular_degrees", minimum=1)
    iterate_i = data.get("iterate", 0)
    if not isinstance(iterate_i, int) or iterate_i < 0:
        raise SpecDocError("iterate must be a nonnegative integer")

    return ModuleSpecDoc(weights, numerator, betti, shift_k, regular, iterate_i)


def load_module_doc(path: str) -> ModuleSpecDoc:
    """Read a module description from a file path, or stdin when path is '-'."""
    try:
        text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    except OSError as exc:
        raise SpecDocError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecDocError(f"invalid JSON in {path}: {exc}") from exc
    return parse_module_doc(data)


def build_series(doc: ModuleSpecDoc) -> tuple[HilbertSeries, BettiTable]:
    """Construct the series and a Betti table consistent with it.

    When the description supplies a Betti table and no transforms, that table
    is returned; otherwise a formal table is derived from the final numerator
    (transforms change the numerator, so the original table no longer
    describes the result).
    """
    weights = WeightSeq(doc.weights)
    try:
        if doc.betti is not None:
            table = BettiTable(doc.betti)
            series = series_from_betti(weights, table)
        else:
            table = None
            series = HilbertSeries(weights, RatPolynomial(doc.numerator))
    except ValueError as exc:
        raise SpecDocError(str(exc)) from exc
    transformed = False
    if doc.shift:
        series = shift(series, doc.shift)
        transformed = True
    for k in doc.regular_degrees:
        series = regular_quotient(series, k)
        transformed = True
    if doc.iterate:
        series = iterate(series, doc.iterate)
        transformed = True
    if table is None or transformed:
        if series.numerator.is_zero:
            raise SpecDocError("the transformed numerator is zero")
        table = betti_from_numerator(series.numerator)
    return series, table


def fraction_str(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecDocError(f"cannot parse rational {text!r}") from exc


def poly_doc(poly: RatPolynomial, var: str = "w") -> dict[str, Any]:
    return {
        "coeffs": [fraction_str(c) for c in poly.coeffs],
        "text": poly.to_text(var),
    }


def complex_doc(value: complex, tol: float) -> dict[str, Any]:
    return {"re": f"{value.real:.17g}", "im": f"{value.imag:.17g}", "abs_tol": tol}
