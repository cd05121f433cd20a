"""Command line interface: ``moezipf {fit,pmf,sample,loglog}``.

Exit codes: 0 success, 2 parse/input error, 3 convergence failure,
4 degenerate data, 5 domain error.
"""

import argparse
import csv
import os
import sys
import warnings
from pathlib import Path

import numpy as np

from . import __version__
from .dist import MOEZipfParams, loglog_series, moezipf_logpmf, moezipf_pmf, moezipf_sample
from .errors import (
    ConvergenceError,
    DegenerateCells,
    DegenerateData,
    DomainError,
    EmptyData,
    NoRoot,
    ParseError,
    ZeroValue,
)
from .ingest import DIRECTIONS, FORMATS, ZERO_POLICIES, IngestSpec, ingest
from .report import FitReport, build_report

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CONVERGENCE = 3
EXIT_DEGENERATE = 4
EXIT_DOMAIN = 5

_EXIT_FOR = (
    ((ParseError, EmptyData, ZeroValue, FileNotFoundError, IsADirectoryError), EXIT_PARSE),
    ((ConvergenceError, NoRoot), EXIT_CONVERGENCE),
    ((DegenerateData, DegenerateCells), EXIT_DEGENERATE),
    ((DomainError,), EXIT_DOMAIN),
)


def _open_out(path):
    if path is None or str(path) == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _ingest_spec(args):
    return IngestSpec(args.format, args.input, args.direction, args.zero_policy)


# -- commands -----------------------------------------------------------------


def cmd_fit(args):
    data = ingest(_ingest_spec(args))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        report = build_report(data, args.threshold, mean_cutoff=args.mean_cutoff)
    text = report.to_text()
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(report.to_json(), encoding="utf-8")
    if args.table:
        Path(args.table).write_text(text, encoding="utf-8")
    return report


def cmd_pmf(args):
    params = MOEZipfParams(args.alpha, args.beta)
    if args.x_max < 2:
        raise DomainError("--x-max must be >= 2")
    series = loglog_series(params, args.x_max)
    xs = np.arange(1, args.x_max + 1)
    pmf = moezipf_pmf(params, xs)
    fh, close = _open_out(args.out)
    try:
        fh.write(f"# asymptote: slope={series.slope!r} intercept={series.intercept!r}\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["x", "pmf", "log_x", "log_pmf"])
        for x, p, lx, lp in zip(xs.tolist(), pmf.tolist(), series.log_x.tolist(), series.log_p.tolist()):
            w.writerow([x, repr(p), repr(lx), repr(lp)])
    finally:
        if close:
            fh.close()


def cmd_sample(args):
    params = MOEZipfParams(args.alpha, args.beta)
    draws = moezipf_sample(params, args.n, seed=args.seed)
    fh, close = _open_out(args.out)
    try:
        fh.write("\n".join(map(str, draws.tolist())))
        fh.write(
            f"\n# moezipf sample alpha={args.alpha!r} beta={args.beta!r} "
            f"n={args.n} seed={args.seed}\n"
        )
    finally:
        if close:
            fh.close()


def cmd_loglog(args):
    data = ingest(_ingest_spec(args))
    report = FitReport.from_json(Path(args.fit).read_text(encoding="utf-8"))
    zipf = report.row("zipf-mle").fit
    moe = report.row("moezipf-mle").fit
    xs = data.values
    log_obs = np.log(data.counts / data.n)
    log_zipf = moezipf_logpmf(MOEZipfParams(zipf.alpha_hat, 1.0), xs)
    log_moe = moezipf_logpmf(moe.params, xs)
    fh, close = _open_out(args.out)
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["x", "log_x", "log_obs_relfreq", "log_zipf_pmf", "log_moezipf_pmf"])
        for row in zip(xs.tolist(), np.log(xs).tolist(), log_obs.tolist(), log_zipf.tolist(), log_moe.tolist()):
            w.writerow([row[0]] + [repr(v) for v in row[1:]])
    finally:
        if close:
            fh.close()


# -- parser -----------------------------------------------------------------


def _add_input(p):
    p.add_argument("input", help="input file")
    p.add_argument("--format", choices=FORMATS, default="observations")
    p.add_argument("--direction", choices=DIRECTIONS, default="out", help="edge_list degree direction")
    p.add_argument("--zero-policy", choices=ZERO_POLICIES, default="drop")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="moezipf",
        description="Zipf and Marshall-Olkin extended Zipf fitting, sampling and plot data.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", help="fit Zipf and MOEZipf and report chi-square / AIC")
    _add_input(p)
    p.add_argument("--threshold", type=int, required=True, help="values >= threshold share the tail cell")
    p.add_argument("--mean-cutoff", type=int, default=None,
                   help="truncate E(Y) at this value in the moments fit (default: exact mean)")
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--table", help="write the text table here")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("pmf", help="tabulate the MOEZipf pmf on 1..x_max as CSV")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--x-max", type=int, default=100)
    p.add_argument("--out", help="output CSV (default stdout)")
    p.set_defaults(func=cmd_pmf)

    p = sub.add_parser("sample", help="draw MOEZipf variates, one per line")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("loglog", help="observed vs fitted log probabilities as CSV")
    _add_input(p)
    p.add_argument("--fit", required=True, help="JSON report written by 'moezipf fit --out'")
    p.add_argument("--out", help="output CSV (default stdout)")
    p.set_defaults(func=cmd_loglog)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except BrokenPipeError:
        # Reader went away (e.g. piped into head); stop quietly.
        sys.stderr = open(os.devnull, "w")
        return EXIT_OK
    except Exception as exc:
        for kinds, code in _EXIT_FOR:
            if isinstance(exc, kinds):
                print(f"moezipf: {type(exc).__name__}: {exc}", file=sys.stderr)
                return code
        raise
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
