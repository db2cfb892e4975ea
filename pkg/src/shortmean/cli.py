"""Command-line interface.

Subcommands: sum, constants, predict, compare, perron, zeta-moment,
series, sweep.  Output is JSON by default (stdout, or --out PATH); scans
can also emit CSV or SVG.  Exit codes: 0 success, 1 usage error,
2 capacity/precision error.
"""

from __future__ import annotations

import argparse
import math
import sys

from mpmath import mp

from . import __version__
from .asymptotics import (
    ExponentTable,
    compare,
    h_threshold,
    predict,
)
from .constants import (
    CONSTANTS_DPS,
    PrecisionError,
    constants_report,
    ramanujan_A0,
)
from .eulerform import euler_form
from .functions import ALL_FNS, MultFnId
from .perron import fit_loglog_slope, perron_error_scan, perron_truncated
from .reports import csv_report, json_report, svg_plot
from .sieve import CapacityError, interval_sum, interval_sums_all
from .zetachecks import second_moment


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fids(name):
    if name == "all":
        return list(ALL_FNS)
    try:
        return [MultFnId(name)]
    except ValueError:
        raise UsageError(f"unknown function selector {name!r}") from None


def _parse_ts(text):
    try:
        return [float(v) for v in text.split(",") if v]
    except ValueError:
        raise UsageError(f"bad T list {text!r}") from None


def _emit(args, payload_bytes):
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload_bytes)
    else:
        sys.stdout.buffer.write(payload_bytes)
    return 0


def _build_parser():
    p = _Parser(prog="shortmean", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, fn=True):
        if fn:
            sp.add_argument("--fn", default="all",
                            help="f1|f2|f3|f4|all")
        sp.add_argument("--out", default=None, help="output path (stdout if absent)")
        sp.add_argument("--format", default="json",
                        choices=["json", "csv", "svg"])
        sp.add_argument("--precision", default=None,
                        choices=["double", "extended"],
                        help="extended (default) for constants, double for scans")
        sp.add_argument("--threads", type=int, default=1)

    sp = sub.add_parser("sum", help="exact short-interval sums from the sieve")
    common(sp)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--h", type=int, required=True)

    sp = sub.add_parser("constants", help="Pi/K expansion constants per function")
    common(sp)
    sp.add_argument("--N", type=int, default=4)

    sp = sub.add_parser("predict", help="N-term main-term prediction")
    common(sp)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--N", type=int, default=2)

    sp = sub.add_parser("compare", help="sieve truth vs prediction")
    common(sp)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--N", type=int, default=2)
    sp.add_argument("--tolerance", type=float, default=0.05)
    sp.add_argument("--timings", action="store_true",
                    help="include runtime_ms (breaks byte-determinism)")

    sp = sub.add_parser("perron", help="truncated Perron error scan")
    common(sp)
    sp.add_argument("--x", type=float, default=1000.5)
    sp.add_argument("--T", default=None,
                    help="single T, or comma list for a scan")

    sp = sub.add_parser("zeta-moment", help="critical-line second moment scan")
    common(sp, fn=False)
    sp.add_argument("--T", default="100,1000,3000")

    sp = sub.add_parser("series", help="Euler-form exponents and g-coefficients")
    common(sp)
    sp.add_argument("--order", type=int, default=12)

    sp = sub.add_parser("sweep", help="prediction error across an x grid")
    common(sp)
    sp.add_argument("--xs", required=True, help="comma list, e.g. 1e6,1e7,1e8")
    sp.add_argument("--h-rule", dest="h_rule", default="x^0.7",
                    help="h as a power of x, e.g. x^0.7")
    sp.add_argument("--N", type=int, default=2)
    return p


def _cmd_sum(args):
    fids = _fids(args.fn)
    if args.h < 1:
        raise UsageError("need h >= 1")
    sums = interval_sums_all(args.x, args.h, threads=args.threads)
    payload = {
        "report": "sum",
        "x": args.x,
        "h": args.h,
        "results": [
            {
                "fid": str(fid),
                "exact": (
                    f"{sums[fid].exact.numerator}/{sums[fid].exact.denominator}"
                ),
                "float": sums[fid].approx,
            }
            for fid in fids
        ],
    }
    return json_report(payload)


def _cmd_constants(args):
    fids = _fids(args.fn)
    dps = 15 if args.precision == "double" else CONSTANTS_DPS
    old = mp.dps
    mp.dps = dps
    try:
        results = [constants_report(fid, N=args.N) for fid in fids]
        a0, a0_bound, a0_cross = ramanujan_A0()
    finally:
        mp.dps = old
    payload = {
        "report": "constants",
        "N": args.N,
        "results": results,
        "ramanujanA0": {
            "value": a0,
            "tailBound": a0_bound,
            "crossRouteDelta": a0_cross,
        },
    }
    return json_report(payload)


def _cmd_predict(args):
    fids = _fids(args.fn)
    results = []
    for fid in fids:
        value, budget, lagrange = predict(fid, args.x, args.h, args.N)
        entry = {
            "fid": str(fid),
            "prediction": value,
            "budget": budget,
            "lagrange": lagrange,
        }
        if args.x >= 10:
            entry["thresholds"] = h_threshold(fid, float(args.x)).to_json_dict()
        results.append(entry)
    payload = {
        "report": "predict",
        "x": args.x,
        "h": args.h,
        "N": args.N,
        "exponents": ExponentTable().to_json_dict(),
        "results": results,
    }
    return json_report(payload)


def _cmd_compare(args):
    fids = _fids(args.fn)
    reports = [
        compare(fid, args.x, args.h, args.N,
                tolerance=args.tolerance, threads=args.threads)
        for fid in fids
    ]
    payload = {
        "report": "compare",
        "results": [r.to_json_dict(include_runtime=args.timings)
                    for r in reports],
    }
    return json_report(payload)


def _cmd_perron(args):
    fids = _fids(args.fn if args.fn != "all" else "f3")
    fid = fids[0]
    if args.T and "," in args.T:
        Ts = _parse_ts(args.T)
        rows = perron_error_scan(fid, args.x, Ts)
        slope = fit_loglog_slope(rows)
        if args.format == "csv":
            return csv_report(
                ("fid", "x", "T", "abs_err", "bound", "ratio"),
                [(str(fid), args.x, T, err, bound, ratio)
                 for T, err, bound, ratio in rows],
            )
        if args.format == "svg":
            return svg_plot(
                [
                    ("abs_err", [(T, max(err, 1e-12)) for T, err, _, _ in rows]),
                    ("bound", [(T, b) for T, _, b, _ in rows]),
                ],
                title=f"truncated-Perron remainder, {fid}, x={args.x}",
                xlabel="T", ylabel="absolute error",
            )
        payload = {
            "report": "perron-scan",
            "fid": str(fid),
            "x": args.x,
            "slope": slope,
            "rows": [
                {"T": T, "abs_err": err, "bound": bound, "ratio": ratio}
                for T, err, bound, ratio in rows
            ],
        }
        return json_report(payload)
    T = float(args.T) if args.T else 1000.0
    run = perron_truncated(fid, args.x, T)
    return json_report({"report": "perron", "run": run.to_json_dict()})


def _cmd_zeta_moment(args):
    Ts = _parse_ts(args.T)
    rows = []
    for T in Ts:
        m = second_moment(T)
        rows.append((T, m, m / (T * math.log(T))))
    if args.format == "csv":
        return csv_report(("T", "moment", "ratio_to_TlnT"), rows)
    if args.format == "svg":
        return svg_plot(
            [("moment", [(T, m) for T, m, _ in rows])],
            title="critical-line second moment",
            xlabel="T", ylabel="integral",
        )
    payload = {
        "report": "zeta-moment",
        "rows": [
            {"T": T, "moment": m, "ratioToTlnT": r} for T, m, r in rows
        ],
    }
    return json_report(payload)


def _cmd_series(args):
    fids = _fids(args.fn)
    payload = {
        "report": "series",
        "order": args.order,
        "results": [euler_form(fid, args.order).to_json_dict() for fid in fids],
    }
    return json_report(payload)


def _parse_h_rule(text):
    if not text.startswith("x^"):
        raise UsageError(f"bad h rule {text!r}; expected like x^0.7")
    try:
        return float(text[2:])
    except ValueError:
        raise UsageError(f"bad h rule {text!r}") from None


def _cmd_sweep(args):
    fids = _fids(args.fn)
    expo = _parse_h_rule(args.h_rule)
    try:
        xs = [int(float(v)) for v in args.xs.split(",") if v]
    except ValueError:
        raise UsageError(f"bad x list {args.xs!r}") from None
    if not xs:
        raise UsageError("empty x list")
    rows = []
    for fid in fids:
        for x in xs:
            h = int(x**expo)
            rep = compare(fid, x, h, args.N, threads=args.threads)
            rows.append(
                (str(fid), x, h, rep.exact_float, rep.prediction, rep.rel_err)
            )
    if args.format == "csv":
        return csv_report(
            ("fid", "x", "h", "exact", "prediction", "rel_err"), rows
        )
    if args.format == "svg":
        series = []
        for fid in fids:
            pts = [(x, max(r, 1e-12)) for f, x, _, _, _, r in rows
                   if f == str(fid)]
            series.append((str(fid), pts))
        return svg_plot(series, title=f"prediction error, N={args.N}",
                        xlabel="x", ylabel="relative error")
    payload = {
        "report": "sweep",
        "N": args.N,
        "hRule": args.h_rule,
        "rows": [
            {"fid": f, "x": x, "h": h, "exact": e, "prediction": p,
             "rel_err": r}
            for f, x, h, e, p, r in rows
        ],
    }
    return json_report(payload)


_HANDLERS = {
    "sum": _cmd_sum,
    "constants": _cmd_constants,
    "predict": _cmd_predict,
    "compare": _cmd_compare,
    "perron": _cmd_perron,
    "zeta-moment": _cmd_zeta_moment,
    "series": _cmd_series,
    "sweep": _cmd_sweep,
}

_PLOTTABLE = {"perron", "zeta-moment", "sweep"}


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.format == "svg" and args.cmd not in _PLOTTABLE:
            raise UsageError(f"--format svg not supported for {args.cmd!r}")
        if args.format == "csv" and args.cmd not in _PLOTTABLE:
            raise UsageError(f"--format csv not supported for {args.cmd!r}")
        payload = _HANDLERS[args.cmd](args)
        return _emit(args, payload)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (CapacityError, PrecisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


def main():
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
