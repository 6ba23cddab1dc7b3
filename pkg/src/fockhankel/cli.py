"""Command line: ``fockhankel run <suite>`` and ``fockhankel sweep <quantity>``.

Exit status is 0 when every check passes, 1 on a failed check and 2 on a
usage error.  Only command-line flags are read; the environment is not.
"""
import argparse
import math
import sys

from .defaults import DEFAULTS, DEFAULTS_VERSION
from .errors import FockDomainError
from .suites import SUITES, SWEEPS, Settings, report_stem

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _p_value(text):
    if text.lower() in ("inf", "infinity"):
        return math.inf
    v = float(text)
    if not v >= 1:
        raise argparse.ArgumentTypeError("p must be >= 1 or 'inf'")
    return v


def _positive(kind):
    def conv(text):
        v = kind(text)
        if not v > 0:
            raise argparse.ArgumentTypeError(f"expected a positive value, got {text}")
        return v
    return conv


def _add_common(p):
    p.add_argument("--alpha", type=_positive(float))
    p.add_argument("--ell", type=_positive(int))
    p.add_argument("--p", type=_p_value)
    p.add_argument("--m-max", dest="m_max", type=_positive(int))
    p.add_argument("--trunc", type=_positive(int))
    p.add_argument("--rel-tol", dest="rel_tol", type=_positive(float))
    p.add_argument("--grid-r", dest="grid_r", type=_positive(int))
    p.add_argument("--grid-theta", dest="grid_theta", type=_positive(int))
    p.add_argument("--r-max", dest="r_max", type=_positive(float))
    p.add_argument("--seed", type=int)
    p.add_argument("--out-dir", dest="out_dir", default="reports")


def build_parser():
    parser = _Parser(prog="fockhankel", description="Verification suites and ratio sweeps.")
    parser.add_argument("--version", action="version", version=f"defaults {DEFAULTS_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    run = sub.add_parser("run", help="run a named verification suite")
    run.add_argument("suite", choices=sorted(SUITES) + ["all"])
    _add_common(run)
    sw = sub.add_parser("sweep", help="write a ratio report for one quantity")
    sw.add_argument("quantity", choices=sorted(SWEEPS))
    _add_common(sw)
    sub.add_parser("defaults", help="print the thresholds table")
    return parser


_SETTING_KEYS = ("alpha", "ell", "p", "m_max", "trunc", "rel_tol", "grid_r", "grid_theta", "r_max", "seed")


def _settings(args):
    s = Settings({k: getattr(args, k) for k in _SETTING_KEYS})
    if s.grid_r < 2:
        raise _UsageError("--grid-r must be at least 2")
    if not s.rel_tol < 1:
        raise _UsageError("--rel-tol must be below 1")
    return s


def run_suite(name, overrides=None, out_dir="reports", echo=print):
    """Run suite ``name`` (or ``"all"``), write reports and return the exit status."""
    if name != "all" and name not in SUITES:
        raise _UsageError(f"unknown suite {name!r}")
    s = Settings(overrides)
    names = sorted(SUITES) if name == "all" else [name]
    status = EXIT_OK
    for n in names:
        rep = SUITES[n](s)
        rep.write(out_dir)
        for c in rep.checks:
            echo(f"[{'PASS' if c.passed else 'FAIL'}] {n}: {c.name} ({c.detail})")
        if not rep.passed:
            status = EXIT_FAIL
    return status


def sweep(quantity, overrides=None, out_dir="reports", echo=print):
    """Write every ratio report of ``quantity``; returns the list of reports."""
    if quantity not in SWEEPS:
        raise _UsageError(f"unknown quantity {quantity!r}")
    reports = SWEEPS[quantity](Settings(overrides))
    for r in reports:
        csv_path, _ = r.write(out_dir, report_stem(r))
        echo(f"{csv_path}: min {r.min_ratio:.6g} max {r.max_ratio:.6g} geo-mean {r.geo_mean_ratio:.6g}")
    return reports


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        if args.command == "defaults":
            print(f"defaults_version {DEFAULTS_VERSION}")
            for k, v in DEFAULTS.items():
                print(f"{k} {v!r}")
            return EXIT_OK
        s = _settings(args)
        if args.command == "run":
            return run_suite(args.suite, s.overrides, args.out_dir)
        sweep(args.quantity, s.overrides, args.out_dir)
        return EXIT_OK
    except _UsageError as exc:
        print(f"fockhankel: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FockDomainError, ValueError) as exc:
        print(f"fockhankel: invalid parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
