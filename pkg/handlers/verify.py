"""`verify`: check an explicit fixed-point configuration against the formula."""
import argparse
from typing import Dict

from exactmath import cyclotomic_field
from lefschetz import FixedConfig, FixedPointType, verify_fixed_config
from utils import format_poly, format_rational, parse_points
from handlers.common import EXIT_FINDING, EXIT_OK, add_format_arg, emit


def register(subparsers) -> None:
    """Add the verify subcommand."""
    parser = subparsers.add_parser('verify', help="evaluate the fixed-point formula on explicit data")
    parser.add_argument('--order', type=int, required=True, help="order N of the automorphism")
    parser.add_argument('--rot', type=int, default=1, help="g*omega = zeta^R omega (default 1)")
    parser.add_argument('--points', default='', help='isolated points as "a,b:count[;a,b:count]..."')
    parser.add_argument('--curve-n', type=int, default=None, help="n = sum(1 - genus) over fixed curves")
    add_format_arg(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    """Evaluate the formula on the given points and curve term; exit 10 on a nonzero residual."""
    order, rot = args.order, args.rot
    multiplicities: Dict[FixedPointType, int] = {}
    for a, b, count in parse_points(args.points):
        t = FixedPointType(a, b, order, rot)
        multiplicities[t] = multiplicities.get(t, 0) + count
    cfg = FixedConfig(multiplicities, args.curve_n)

    residual = verify_fixed_config(order, rot, cfg)
    passed = residual.is_zero()
    result = {
        'order': order,
        'rotation': rot,
        'field_degree': cyclotomic_field(order).degree,
        'points': cfg.as_dict(),
        'total_points': cfg.total_points,
        'residual': [format_rational(c) for c in residual.coords],
        'residual_value': format_poly(residual.coords, var='zeta'),
        'status': 'PASS' if passed else 'FAIL',
    }
    emit(args, result)
    return EXIT_OK if passed else EXIT_FINDING
