"""`search`: bounded enumeration of nonnegative fixed-point configurations."""
import argparse

from intsolve import nonneg_enumerate
from lefschetz import build_system
from handlers.common import EXIT_OK, add_format_arg, add_order_args, emit


def register(subparsers) -> None:
    """Add the search subcommand."""
    parser = subparsers.add_parser('search', help="list configurations with at most B isolated points")
    add_order_args(parser)
    parser.add_argument('--max-points', type=int, required=True, help="bound B on the number of isolated points")
    parser.add_argument('--n-min', type=int, default=0, help="lower bound on the curve term n (default 0)")
    parser.add_argument('--n-max', type=int, default=0, help="upper bound on the curve term n (default 0)")
    add_format_arg(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    """List nonnegative configurations within the point and curve bounds."""
    system = build_system(args.order, args.rot, args.allow_impure)
    configs = nonneg_enumerate(system, args.max_points, (args.n_min, args.n_max))
    result = {
        'order': system.order,
        'rotation': system.rotation,
        'max_points': args.max_points,
        'n_range': [args.n_min, args.n_max] if system.has_curve_term else None,
        'count': len(configs),
        'configs': [dict(cfg.as_dict(), total_points=cfg.total_points) for cfg in configs],
    }
    emit(args, result)
    return EXIT_OK
