"""
Main entry point for the coclique certificate tool.

Usage:
    python main.py char 27 "[n-2,2]" "(n-2,1^2)"
    python main.py char 20 --table
    python main.py classes 5
    python main.py certify 27 --out reports/n27.json
    python main.py certify 20 --point 100,50
    python main.py spectrum 33 --mode hybrid
    python main.py oracle mis 5
    python main.py search 13 --strategy grid

Exit codes: 0 success, 1 usage or input error, 2 certification failure.
"""

import argparse
import logging
import sys

from certificate_app import COMMANDS, FORMATS, ORACLE_CHECKS, PARITIES, CertificateApp, RunConfig
from certification import STRATEGIES
from spectra.spectrum import MODES
from utils import TextColors as TxtClr, get_settings
from utils.errors import (
    CertificationFailure,
    ConfigurationError,
    InvalidArgumentError,
    OracleRefusal,
    ReportError,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so usage errors map to exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise InvalidArgumentError(message)


def _add_output_flags(parser):
    parser.add_argument("--format", dest="output_format", choices=FORMATS, default="pretty",
                        help="Output format on stdout (default: pretty).")
    parser.add_argument("--out", help="Write the report to a .json or .csv file.")


def _add_spectrum_flags(parser):
    parser.add_argument("--point", help="Point t,s of the two-parameter weights, as rationals p/q.")
    parser.add_argument("--mode", choices=MODES, default="exact", help="exact, or hybrid with the large-degree bound.")
    parser.add_argument("--threshold", type=int, help="Hybrid mode degree threshold.")
    parser.add_argument("--workers", type=int, help="Worker processes; overrides CERT_WORKERS.")


def build_parser():
    """Builds the argument parser with one subparser per command."""
    parser = _ArgumentParser(description="Spectral certificates for 3-setwise intersecting permutation families.")
    parser.add_argument("--verbose", action="store_true", help="Log progress at INFO level.")
    commands = parser.add_subparsers(dest="command", required=True, metavar="{" + ",".join(COMMANDS) + "}")

    char = commands.add_parser("char", help="Character value, or a table with --table.")
    char.add_argument("n", type=int)
    char.add_argument("partition", nargs="?", help='Partition such as "[n-2,2]" or "[25,2]".')
    char.add_argument("cycle_type", nargs="?", help='Cycle type such as "(n-2,1^2)".')
    char.add_argument("--table", action="store_true", help="Small shapes on the selected classes.")
    char.add_argument("--full", action="store_true", help="With --table: the whole character table.")
    char.add_argument("--parity", choices=PARITIES, help="Class list to use with --table.")
    _add_output_flags(char)

    classes = commands.add_parser("classes", help="t-derangement classes with their sizes.")
    classes.add_argument("n", type=int)
    classes.add_argument("t", type=int, nargs="?", default=3)
    _add_output_flags(classes)

    certify = commands.add_parser("certify", help="Build and verify the certificate for n.")
    certify.add_argument("n", type=int)
    _add_spectrum_flags(certify)
    certify.add_argument("--budget", type=int, help="Weighting-search budget where the search is used.")
    _add_output_flags(certify)

    spectrum = commands.add_parser("spectrum", help="Full spectrum of the two-parameter weighting.")
    spectrum.add_argument("n", type=int)
    _add_spectrum_flags(spectrum)
    _add_output_flags(spectrum)

    oracle = commands.add_parser("oracle", help="Brute-force cross-checks for small n.")
    oracle.add_argument("oracle_check", choices=ORACLE_CHECKS)
    oracle.add_argument("n", type=int)
    oracle.add_argument("--t", type=int, default=3, help="Derangement parameter for the spectrum check.")
    oracle.add_argument("--oracle-max-n", type=int, help="Overrides CERT_ORACLE_MAX_N.")
    oracle.add_argument("--mis-max-n", type=int, help="Overrides CERT_MIS_MAX_N.")
    oracle.add_argument("--format", dest="output_format", choices=FORMATS, default="pretty")

    search = commands.add_parser("search", help="Search for a weighting and certify it.")
    search.add_argument("n", type=int)
    search.add_argument("--budget", type=int, help="Exact checks allowed; overrides CERT_SEARCH_BUDGET.")
    search.add_argument("--strategy", choices=STRATEGIES, default="lp")
    search.add_argument("--workers", type=int, help="Worker processes; overrides CERT_WORKERS.")
    _add_output_flags(search)

    return parser


def build_run_config(args):
    """Turns parsed arguments into a validated RunConfig."""
    settings = get_settings()
    point = None
    if getattr(args, "point", None) is not None:
        point = tuple(piece.strip() for piece in args.point.split(","))

    config = RunConfig(
        command=args.command,
        n=args.n,
        partition=getattr(args, "partition", None),
        cycle_type=getattr(args, "cycle_type", None),
        table=getattr(args, "table", False),
        full=getattr(args, "full", False),
        t=getattr(args, "t", 3),
        parity=getattr(args, "parity", None),
        point=point,
        mode=getattr(args, "mode", "exact"),
        threshold=getattr(args, "threshold", None),
        output_format=args.output_format,
        out=getattr(args, "out", None),
        budget=getattr(args, "budget", None),
        strategy=getattr(args, "strategy", "lp"),
        workers=getattr(args, "workers", None) or settings.workers,
        oracle_check=getattr(args, "oracle_check", None),
        oracle_max_n=getattr(args, "oracle_max_n", None) or settings.oracle_max_n,
        mis_max_n=getattr(args, "mis_max_n", None) or settings.mis_max_n,
    )
    config.validate()
    return config


def configure_logging(verbose):
    level = logging.INFO if verbose else get_settings().log_level
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv=None):
    """Main entry point; returns the process exit code."""
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.verbose)
        config = build_run_config(args)
        return CertificateApp(config).run()
    except CertificationFailure as e:
        where = f" at {e.partition}" if e.partition is not None else ""
        print(f"{TxtClr.LR}Certification failed{where}: {e}{TxtClr.RESET}", file=sys.stderr)
        return EXIT_FAILURE
    except (InvalidArgumentError, OracleRefusal, ConfigurationError, ReportError) as e:
        print(f"{TxtClr.LR}Error: {e}{TxtClr.RESET}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
