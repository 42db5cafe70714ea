"""Command-line front end.

Subcommands: hilbert, quasipoly, eval, residues, mult, partition, check, grid.
Results are JSON on stdout; the grid subcommand writes a CSV (and optionally a
rendered figure) instead.  Exit codes: 0 success, 1 failed check or pole
proximity, 2 malformed input.
"""

from __future__ import annotations

import argparse
import cmath
import csv
import json
import math
import os
import sys
from fractions import Fraction

from .exact import WeightSeq
from .hilbert import (
    bounded_denumerant,
    dimension,
    expand,
    multiplicity,
    quasi_polynomial,
    restricted_partition,
    validate,
)
from .analytic import (
    DEFAULT_CONFIG,
    EvalConfig,
    PoleError,
    iterated_residues_closed,
    iterated_residues_limit,
    residues_betti,
    residues_closed,
    residues_limit,
    zeta_closed,
    zeta_direct,
)
from .checks import SUITES, run_suite
from .moduledoc import (
    SpecDocError,
    build_series,
    complex_doc,
    fraction_str,
    load_module_doc,
    parse_fraction,
    poly_doc,
)
from .verify import samuel_multiplicity

TOL_ENV = "GRADED_ZETA_TOL"


def _config_from_env() -> EvalConfig:
    raw = os.environ.get(TOL_ENV)
    if not raw:
        return DEFAULT_CONFIG
    try:
        tol = float(raw)
    except ValueError:
        raise SpecDocError(f"{TOL_ENV} must be a float, got {raw!r}")
    return EvalConfig(target_abs_tol=tol)


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) not in (1, 2):
        raise SpecDocError(f"cannot parse complex number {text!r}; use RE or RE,IM")
    try:
        re = float(parts[0])
        im = float(parts[1]) if len(parts) == 2 else 0.0
    except ValueError as exc:
        raise SpecDocError(f"cannot parse complex number {text!r}") from exc
    return complex(re, im)


def _parse_weights(text: str) -> WeightSeq:
    try:
        return WeightSeq(tuple(int(x) for x in text.split(",")))
    except ValueError as exc:
        raise SpecDocError(f"bad weight list {text!r}: {exc}") from exc


def _parse_range(text: str) -> list[float]:
    try:
        lo_s, hi_s, step_s = text.split(":")
        lo, hi, step = float(lo_s), float(hi_s), float(step_s)
    except ValueError as exc:
        raise SpecDocError(f"bad range {text!r}; use LO:HI:STEP") from exc
    if step <= 0 or hi < lo:
        raise SpecDocError(f"bad range {text!r}; need LO <= HI and STEP > 0")
    count = int(round((hi - lo) / step))
    return [lo + i * step for i in range(count + 1)]


def _emit(doc: dict) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _pole_error_doc(exc: PoleError) -> dict:
    doc = {
        "error": "pole",
        "pole": exc.pole,
        "residue": poly_doc(exc.residue),
    }
    if exc.residue_value is not None:
        doc["residue_value"] = f"{exc.residue_value.real:.17g}"
    return doc


def _cmd_hilbert(args, cfg) -> int:
    doc = load_module_doc(args.spec)
    series, _ = build_series(doc)
    values = expand(series, args.n)
    _emit(
        {
            "operation": "hilbert",
            "input": doc.to_dict(),
            "values": values,
            "is_module_series": validate(series, args.n),
        }
    )
    return 0


def _cmd_quasipoly(args, cfg) -> int:
    doc = load_module_doc(args.spec)
    series, _ = build_series(doc)
    qp = quasi_polynomial(series)
    _emit(
        {
            "operation": "quasipoly",
            "input": doc.to_dict(),
            "period": qp.period,
            "degree": qp.degree,
            "alpha": qp.alpha,
            "coefficients": [
                [fraction_str(c) for c in row] for row in qp.coeffs
            ],
        }
    )
    return 0


def _cmd_eval(args, cfg) -> int:
    doc = load_module_doc(args.spec)
    series, _ = build_series(doc)
    z = _parse_complex(args.z)
    try:
        value = zeta_closed(series, z, args.w, cfg)
    except PoleError as exc:
        json.dump(_pole_error_doc(exc), sys.stderr, indent=2)
        sys.stderr.write("\n")
        return 1
    out = {
        "operation": "eval",
        "input": doc.to_dict(),
        "z": {"re": z.real, "im": z.imag},
        "w": args.w,
        "value": complex_doc(value, cfg.target_abs_tol),
    }
    if args.direct:
        direct = zeta_direct(series, z, args.w)
        out["direct"] = complex_doc(direct, 1e-10)
        out["difference"] = f"{abs(value - direct):.3e}"
    _emit(out)
    return 0


def _cmd_residues(args, cfg) -> int:
    doc = load_module_doc(args.spec)
    series, betti = build_series(doc)
    if args.betti_route:
        table = residues_betti(series.weights, betti)
    elif args.iterate:
        table = (
            iterated_residues_limit(series, args.iterate)
            if args.limit
            else iterated_residues_closed(series, args.iterate)
        )
    elif args.limit:
        table = residues_limit(series)
    else:
        table = residues_closed(series)
    poles = {}
    for pole, poly in table.items():
        entry = poly_doc(poly)
        if args.w is not None:
            w = parse_fraction(args.w)
            entry["at_w"] = fraction_str(poly(w))
        poles[str(pole)] = entry
    _emit(
        {
            "operation": "residues",
            "input": doc.to_dict(),
            "route": (
                "betti"
                if args.betti_route
                else ("limit" if args.limit else "closed")
            )
            + (f"+iterate{args.iterate}" if args.iterate else ""),
            "pole_bound": table.m,
            "poles": poles,
        }
    )
    return 0


def _cmd_mult(args, cfg) -> int:
    doc = load_module_doc(args.spec)
    series, _ = build_series(doc)
    data = multiplicity(series)
    m = dimension(series)
    top_coeff = quasi_polynomial(series).coeffs[m - 1][0]
    closed0 = residues_closed(series).value(m, 0)
    limit_res = residues_limit(series).value(m, 0)
    iterated = iterated_residues_limit(series, 1).value(m + 1, 0)
    out = {
        "operation": "mult",
        "input": doc.to_dict(),
        "dimension": m,
        "e": fraction_str(data.e),
        "hilbert_coefficients": [fraction_str(c) for c in data.coefficients],
        "residue_routes": {
            "top_quasi_coefficient": fraction_str(
                math.factorial(m - 1) * top_coeff
            ),
            "closed_at_w0": fraction_str(math.factorial(m - 1) * closed0),
            "limit": fraction_str(math.factorial(m - 1) * limit_res),
            "iterated": fraction_str(math.factorial(m) * iterated),
        },
    }
    if args.samuel:
        out["samuel"] = fraction_str(samuel_multiplicity(series))
    _emit(out)
    return 0


def _cmd_partition(args, cfg) -> int:
    a = _parse_weights(args.a)
    fn = bounded_denumerant if args.bounded else restricted_partition
    values = [fn(a, n) for n in range(args.n + 1)]
    _emit(
        {
            "operation": "partition",
            "a": list(a.weights),
            "bounded": bool(args.bounded),
            "n": args.n,
            "values": values,
            "value": values[args.n],
        }
    )
    return 0


def _cmd_check(args, cfg) -> int:
    report = run_suite(args.suite, cfg)
    _emit({"operation": "check", **report.to_dict()})
    return 0 if report.passed else 1


def _cmd_grid(args, cfg) -> int:
    doc = load_module_doc(args.spec)
    series, _ = build_series(doc)
    res = _parse_range(args.re)
    ims = _parse_range(args.im)
    rows = []
    magnitudes = []
    for im in ims:
        mag_row = []
        for re in res:
            z = complex(re, im)
            try:
                value = zeta_closed(series, z, args.w, cfg)
                mag, arg = abs(value), cmath.phase(value)
            except PoleError:
                mag, arg = float("nan"), float("nan")
            rows.append((re, im, mag, arg))
            mag_row.append(mag)
        magnitudes.append(mag_row)
    with open(args.out, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["re", "im", "abs", "arg"])
        for re, im, mag, arg in rows:
            writer.writerow([f"{re:.17g}", f"{im:.17g}", f"{mag:.17g}", f"{arg:.17g}"])
    out = {
        "operation": "grid",
        "input": doc.to_dict(),
        "points": len(rows),
        "out": args.out,
    }
    if args.plot:
        _render_grid_figure(args.plot, res, ims, rows)
        out["plot"] = args.plot
    _emit(out)
    return 0


def _render_grid_figure(path: str, res, ims, rows) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    mags = np.array([row[2] for row in rows]).reshape(len(ims), len(res))
    args_ = np.array([row[3] for row in rows]).reshape(len(ims), len(res))
    fig, axes = plt.subplots(1, 2, figsize=(11.0, 4.2), constrained_layout=True)
    with np.errstate(divide="ignore", invalid="ignore"):
        log_mag = np.log10(mags)
    mesh0 = axes[0].pcolormesh(res, ims, log_mag, shading="nearest", cmap="viridis")
    axes[0].set_title("log10 |zeta|")
    fig.colorbar(mesh0, ax=axes[0])
    mesh1 = axes[1].pcolormesh(
        res, ims, args_, shading="nearest", cmap="twilight", vmin=-math.pi, vmax=math.pi
    )
    axes[1].set_title("arg zeta")
    fig.colorbar(mesh1, ax=axes[1])
    for ax in axes:
        ax.set_xlabel("Re z")
        ax.set_ylabel("Im z")
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graded-zeta",
        description=(
            "Hilbert series of graded modules, their zeta-type Dirichlet "
            "series, and exact residue invariants."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec(p):
        p.add_argument("--spec", required=True, help="module description JSON file ('-' for stdin)")

    p = sub.add_parser("hilbert", help="expand the series coefficients")
    add_spec(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("quasipoly", help="period, stabilization index, coefficient table")
    add_spec(p)
    p.set_defaults(func=_cmd_quasipoly)

    p = sub.add_parser("eval", help="evaluate the zeta function at a point")
    add_spec(p)
    p.add_argument("--z", required=True, help="complex point RE or RE,IM")
    p.add_argument("--w", type=float, required=True)
    p.add_argument("--direct", action="store_true", help="cross-check against direct summation")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("residues", help="exact residue table")
    add_spec(p)
    p.add_argument("--w", help="specialize w exactly (rational like 3/4)")
    p.add_argument("--limit", action="store_true", help="limit-variant residues")
    p.add_argument("--betti-route", action="store_true", help="compute from the Betti table")
    p.add_argument("--iterate", type=int, default=0, help="use the i-fold partial-sum series")
    p.set_defaults(func=_cmd_residues)

    p = sub.add_parser("mult", help="multiplicity and Hilbert coefficients")
    add_spec(p)
    p.add_argument("--samuel", action="store_true", help="include the iterated-residue route")
    p.set_defaults(func=_cmd_mult)

    p = sub.add_parser("partition", help="restricted partition / bounded denumerant values")
    p.add_argument("--a", required=True, help="comma-separated weights")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bounded", action="store_true")
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("check", help="run a named verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("grid", help="CSV of |zeta| and arg over a rectangle of z values")
    add_spec(p)
    p.add_argument("--w", type=float, required=True)
    p.add_argument("--re", required=True, help="LO:HI:STEP")
    p.add_argument("--im", required=True, help="LO:HI:STEP")
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--plot", help="also render the grid to this image file")
    p.set_defaults(func=_cmd_grid)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_env()
        return args.func(args, cfg)
    except SpecDocError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PoleError as exc:
        json.dump(_pole_error_doc(exc), sys.stderr, indent=2)
        sys.stderr.write("\n")
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
