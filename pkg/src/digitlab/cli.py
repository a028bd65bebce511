"""Command-line front end.

Subcommands run the two experiments and write deterministic CSV files
(optionally with a rendered figure next to them):

  powers        digit-sum series of p^n in base q
  constant      deviation series for pi, e, sqrt2, or a digit file
  analyze-file  shorthand for `constant --source file`
  hist          histogram of the CLT-normalized digit-sum values

Numeric CSV fields use 10 significant digits; undefined deviations
(n < 3) are empty fields.  Summaries go to stdout, data to files.
"""

from __future__ import annotations

import argparse
import sys

from . import analysis, power_walk, streams
from .errors import DigitFileError, ResourceLimitError


def _fmt(x: float | int | None) -> str:
    if x is None:
        return ""
    if isinstance(x, int):
        return str(x)
    return format(x, ".10g")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digitlab",
        description="Digit-sum randomness diagnostics for powers and constants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    powers = sub.add_parser("powers", help="digit-sum series of p^n in base q")
    powers.add_argument("--p", type=int, default=2)
    powers.add_argument("--q", type=int, default=3)
    powers.add_argument("--n-max", type=int, required=True)
    powers.add_argument("--stride", type=int, default=1)
    powers.add_argument("--c0", type=float, default=10.0,
                        help="constant in the proven lower-bound margin column")
    powers.add_argument("--cap", type=int, default=10 ** 7,
                        help="abort when the power exceeds this many digits")
    powers.add_argument("--out", required=True)
    powers.add_argument("--plot", help="also render the deviation series to this image")

    constant = sub.add_parser("constant", help="deviation series of a digit stream")
    constant.add_argument("--source", choices=["pi", "e", "sqrt2", "file"],
                          required=True)
    constant.add_argument("--path", help="digit file (source=file)")
    constant.add_argument("--skip", type=int, default=0,
                          help="leading digits to drop before analysis")
    constant.add_argument("--count", type=int,
                          help="number of digits (required unless source=file)")
    constant.add_argument("--stride", type=int, default=None,
                          help="emit every k-th n (default: adaptive downsampling)")
    constant.add_argument("--cap", type=int, default=streams.DEFAULT_DIGIT_CAP)
    constant.add_argument("--out", required=True)
    constant.add_argument("--plot")

    afile = sub.add_parser("analyze-file", help="deviation series of a digit file")
    afile.add_argument("--path", required=True)
    afile.add_argument("--skip", type=int, default=0)
    afile.add_argument("--count", type=int)
    afile.add_argument("--stride", type=int, default=None)
    afile.add_argument("--cap", type=int, default=streams.DEFAULT_DIGIT_CAP)
    afile.add_argument("--out", required=True)
    afile.add_argument("--plot")

    hist = sub.add_parser("hist", help="histogram of normalized digit-sum values")
    hist.add_argument("--p", type=int, default=2)
    hist.add_argument("--q", type=int, default=3)
    hist.add_argument("--n-max", type=int, required=True)
    hist.add_argument("--bins", type=int, default=40)
    hist.add_argument("--range-lo", type=float, default=-4.0)
    hist.add_argument("--range-hi", type=float, default=4.0)
    hist.add_argument("--cap", type=int, default=10 ** 7)
    hist.add_argument("--out", required=True)
    hist.add_argument("--plot")

    return parser


# ---- powers ----------------------------------------------------------

def _cmd_powers(args: argparse.Namespace) -> int:
    stats = power_walk.ExpectedStats.for_pair(args.p, args.q)
    cfg = power_walk.StewartConfig(c0=args.c0)
    points: list[analysis.DeltaPoint] = []
    with open(args.out, "w", newline="") as fh:
        fh.write("n,k,S,s_value,kappa,delta,stewart_margin\n")
        for sample in power_walk.run_power_walk(
            args.p, args.q, args.n_max, stride=args.stride, digit_cap=args.cap
        ):
            if sample.n >= 3:
                delta = power_walk.delta_power(sample, stats)
                margin = power_walk.stewart_margin(sample, cfg)
            else:
                delta = margin = None
            points.append(analysis.DeltaPoint(n=sample.n, s=sample.s, delta=delta))
            fh.write(
                f"{sample.n},{sample.k},{sample.s},"
                f"{_fmt(power_walk.s_value(sample, stats))},"
                f"{_fmt(power_walk.kappa(sample, stats))},"
                f"{_fmt(delta)},{_fmt(margin)}\n"
            )
    defined = [p for p in points if p.delta is not None]
    if defined:
        lo, hi, outside = analysis.series_extrema(defined)
        lo_n = next(p.n for p in defined if p.delta == lo)
        hi_n = next(p.n for p in defined if p.delta == hi)
        print(
            f"powers p={args.p} q={args.q} n_max={args.n_max}: "
            f"delta min={_fmt(lo)} (n={lo_n}), max={_fmt(hi)} (n={hi_n}), "
            f"|delta|>1 for {outside} of {len(defined)} emitted points"
        )
    else:
        print(f"powers p={args.p} q={args.q} n_max={args.n_max}: "
              "no points with n >= 3 emitted")
    if args.plot:
        from . import report

        report.save_delta_plot(
            points, args.plot,
            title=f"digit-sum deviation of {args.p}^n in base {args.q}",
        )
    return 0


# ---- constant / analyze-file -----------------------------------------

def _load_stream(args: argparse.Namespace) -> streams.DigitStream:
    if args.source == "file":
        if not args.path:
            raise ValueError("--path is required with --source file")
        return streams.file_digits(args.path, count=args.count,
                                   skip=args.skip, cap=args.cap)
    if args.count is None:
        raise ValueError(f"--count is required with --source {args.source}")
    count = args.count + args.skip
    if args.source == "pi":
        stream = streams.pi_digits(count, cap=args.cap)
    elif args.source == "e":
        stream = streams.e_digits(count, cap=args.cap)
    else:
        stream = streams.sqrt_digits(2, count, cap=args.cap)
    if args.skip:
        stream = streams.DigitStream(stream.source, stream.digits[args.skip:])
    return stream


def _cmd_constant(args: argparse.Namespace) -> int:
    stream = _load_stream(args)
    points: list[analysis.DeltaPoint] = []
    with open(args.out, "w", newline="") as fh:
        fh.write("n,S,delta\n")
        for point in analysis.running_delta(stream, stride=args.stride):
            points.append(point)
            fh.write(f"{point.n},{point.s},{_fmt(point.delta)}\n")
    final = points[-1]
    print(f"{stream.source}: N={final.n} S={final.s} delta(N)={_fmt(final.delta)}")
    try:
        lo, hi, outside = analysis.series_extrema(points, from_n=100)
        total = sum(1 for p in points if p.n >= 100 and p.delta is not None)
        print(f"extrema (n>=100): min={_fmt(lo)}, max={_fmt(hi)}, "
              f"|delta|>1 for {outside} of {total} points")
    except ValueError:
        print("extrema (n>=100): series too short")
    diag = analysis.convergence_diagnostic(points, final.n)
    if diag is not None:
        early, late = diag
        trend = "decreasing" if late < early else "not decreasing"
        print(f"mean |delta|: early window={_fmt(early)}, "
              f"late window={_fmt(late)} ({trend})")
    else:
        print("mean |delta|: series too short for window comparison")
    if args.plot:
        from . import report

        report.save_delta_plot(points, args.plot,
                               title=f"digit-sum deviation of {stream.source}")
    return 0


# ---- hist ------------------------------------------------------------

def _cmd_hist(args: argparse.Namespace) -> int:
    stats = power_walk.ExpectedStats.for_pair(args.p, args.q)
    hist = analysis.Histogram(lo=args.range_lo, hi=args.range_hi, bins=args.bins)
    for sample in power_walk.run_power_walk(
        args.p, args.q, args.n_max, stride=1, digit_cap=args.cap
    ):
        hist.insert(power_walk.s_value(sample, stats))
    with open(args.out, "w", newline="") as fh:
        fh.write("bin_lo,bin_hi,count,expected_normal\n")
        for count, (lo, hi) in zip(hist.counts, hist.edges()):
            expected = hist.total * (analysis.normal_cdf(hi) - analysis.normal_cdf(lo))
            fh.write(f"{_fmt(lo)},{_fmt(hi)},{count},{_fmt(expected)}\n")
    stat, df = analysis.chi_square_vs_normal(hist)
    degenerate = " (degenerate)" if df == 0 else ""
    print(f"hist p={args.p} q={args.q} n_max={args.n_max}: "
          f"chi_square={_fmt(stat)} df={df}{degenerate}")
    if args.plot:
        from . import report

        report.save_histogram_plot(
            hist, args.plot,
            title=f"normalized digit sums of {args.p}^n in base {args.q}",
        )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "analyze-file":
        args.source = "file"
    handler = {
        "powers": _cmd_powers,
        "constant": _cmd_constant,
        "analyze-file": _cmd_constant,
        "hist": _cmd_hist,
    }[args.command]
    try:
        return handler(args)
    except (ValueError, ResourceLimitError, DigitFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
