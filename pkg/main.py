"""Command-line entry point of the Lefschetz engine."""
import argparse
import logging
import sys
from typing import List, Optional

from config import LOG_LEVEL
from exactmath import InvariantViolation
from utils import format_error

from handlers import (
    orders,
    system,
    analyze,
    verify,
    search,
    check_paper,
)
from handlers.common import EXIT_INVARIANT, EXIT_USAGE

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """Top-level parser with one subparser per handler."""
    parser = argparse.ArgumentParser(
        prog='lefschetz',
        description="Exact holomorphic Lefschetz analysis of automorphisms of K3 surfaces.",
    )
    subparsers = parser.add_subparsers(dest='command', required=True)
    orders.register(subparsers)
    system.register(subparsers)
    analyze.register(subparsers)
    verify.register(subparsers)
    search.register(subparsers)
    check_paper.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and return its exit code."""
    logging.basicConfig(
        level=getattr(logging, LOG_LEVEL, logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 on --help
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    args.argv = argv

    try:
        return args.handler(args)
    except InvariantViolation as e:
        logger.error(f"Invariant violation in {args.command}: {str(e)}", exc_info=True)
        print(format_error(f"internal invariant violated: {e}"), file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, ZeroDivisionError) as e:
        logger.error(f"Error in {args.command}: {str(e)}", exc_info=True)
        print(format_error(str(e)), file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
