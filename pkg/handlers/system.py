"""`system`: dump the linear system of the fixed-point formula."""
import argparse

from lefschetz import build_system
from handlers.common import EXIT_OK, add_format_arg, add_order_args, emit


def register(subparsers) -> None:
    """Add the system subcommand."""
    parser = subparsers.add_parser('system', help="print the Lefschetz linear system for (N, R)")
    add_order_args(parser)
    add_format_arg(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    """Print the linear system for (N, R)."""
    system = build_system(args.order, args.rot, args.allow_impure)
    result = {'rows': system.row_count, 'unknowns': system.column_count}
    result.update(system.to_dict())
    emit(args, result)
    return EXIT_OK
