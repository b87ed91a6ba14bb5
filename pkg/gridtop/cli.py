"""Command line routing for `python manage.py ...` and `python -m gridtop ...`."""
import argparse
import logging
import logging.config

from core.exceptions import (
    EXIT_CAPACITY,
    EXIT_FAILED,
    EXIT_USAGE,
    CapacityError,
    DomainError,
    GridtopError,
)
from core.urls import commandpatterns
from gridtop import settings

logger = logging.getLogger(__name__)


def _family_options(parser, k_required=True):
    parser.add_argument("--family", help="graph family, e.g. g2xn:4, g2xn':3, h1:3, grid:4x5")
    parser.add_argument("--kind", choices=["total", "cut"], default="total")
    parser.add_argument("--k", type=int, required=k_required)


def build_parser():
    parser = argparse.ArgumentParser(prog="gridtop", description="Cut complexes of grid graphs.")
    parser.add_argument("--max-universe", type=int, help="enumeration cap on the vertex universe")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="write the facets of a cut complex")
    _family_options(build)
    build.add_argument("--out")

    betti = sub.add_parser("betti", help="reduced Betti numbers over F_p")
    betti.add_argument("--input", help="facet file")
    _family_options(betti, k_required=False)
    betti.add_argument("--field", type=int)
    betti.add_argument("--check", action="store_true", help="cross-check primes, Euler and boundary squared")
    output = betti.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true", help="JSON summary (the default)")
    output.add_argument("--text", action="store_true")

    shell = sub.add_parser("shell", help="shelling orders")
    actions = shell.add_subparsers(dest="action", required=True)
    check = actions.add_parser("check")
    check.add_argument("--input", required=True)
    check.add_argument("--order", required=True)
    build_2xn = actions.add_parser("build-2xn")
    build_2xn.add_argument("--n", type=int, required=True)
    build_2xn.add_argument("--k", type=int, required=True)
    build_2xn.add_argument("--budget", type=int)
    build_2xn.add_argument("--out")
    search = actions.add_parser("search")
    search.add_argument("--input", required=True)
    search.add_argument("--budget", type=int)
    search.add_argument("--out")

    morse = sub.add_parser("morse", help="element matching sequences on total cut complexes")
    morse.add_argument("--family", required=True)
    morse.add_argument("--k", type=int, default=2)
    morse.add_argument("--vertices", help="comma-separated vertex labels, matched in order")
    morse.add_argument("--order", choices=["neighbor", "increasing"], default="neighbor")
    morse.add_argument("--report", choices=["json", "text"], default="text")

    verify = sub.add_parser("verify", help="run claim sweeps")
    verify.add_argument("claim", help="claim id or all")
    verify.add_argument("--n-max", type=int)
    verify.add_argument("--m-max", type=int)
    verify.add_argument("--primes", help="e.g. 2,3")
    fmt = verify.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    verify.add_argument("--out")
    verify.add_argument("--workers", type=int)
    verify.add_argument("--progress", action="store_true")

    graph = sub.add_parser("graph", help="DOT export of a family member")
    graph.add_argument("--family", required=True)
    graph.add_argument("--out")
    return parser


def _configure(args):
    if args.max_universe is not None:
        settings.MAX_UNIVERSE = args.max_universe
    if getattr(args, "workers", None) is not None:
        settings.WORKERS = args.workers
    if args.log_level:
        settings.LOG_LEVEL = args.log_level.upper()
        for name in ("core", "gridtop"):
            settings.LOGGING["loggers"][name]["level"] = settings.LOG_LEVEL
    logging.config.dictConfig(settings.LOGGING)


def run_cli(argv=None):
    """Parse `argv`, run one subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        _configure(args)
    except ValueError as exc:
        logger.error(f"Bad logging configuration: {exc}")
        return EXIT_USAGE

    handler = commandpatterns[args.command]
    try:
        return handler(args)
    except CapacityError as exc:
        logger.error(f"🚫 {exc}")
        return EXIT_CAPACITY
    except DomainError as exc:
        logger.error(f"🚫 {exc}")
        return EXIT_USAGE
    except GridtopError as exc:
        logger.error(f"❌ {exc}")
        return EXIT_FAILED
    except Exception:
        logger.exception(f"🔴 {args.command} failed")
        return EXIT_FAILED
