"""`analyze`: integer feasibility of the fixed-point constraint, with certificates."""
import argparse
import json
import logging
import sys
from pathlib import Path

from intsolve import Verdict, integer_feasibility, parity_obstruction, solved_relations
from lefschetz import LefschetzSystem, build_system
from utils import format_obstruction, format_rational
from handlers.common import EXIT_FINDING, EXIT_OK, add_format_arg, add_order_args, emit, relation_text

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    """Add the analyze subcommand."""
    parser = subparsers.add_parser('analyze', help="decide whether the system for (N, R) has an integer solution")
    add_order_args(parser, required=False)
    parser.add_argument(
        '--system-json', metavar='PATH',
        help="analyse a system document written by `system --format json` ('-' reads stdin)",
    )
    parser.add_argument('--relations', action='store_true', help="also print the solved relations")
    add_format_arg(parser)
    parser.set_defaults(handler=handle)


def load_system_document(path: str) -> LefschetzSystem:
    """Read a system from JSON; a full report document is unwrapped."""
    try:
        text = sys.stdin.read() if path == '-' else Path(path).read_text(encoding='utf-8')
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as e:
        logger.error(f"Failed to read system document {path}: {str(e)}")
        raise ValueError(f"cannot read system document {path}: {e}")
    if isinstance(data, dict) and 'result' in data:
        data = data['result']
    return LefschetzSystem.from_dict(data)


def handle(args: argparse.Namespace) -> int:
    """Decide integer feasibility and report the witness or the certificate."""
    if args.system_json:
        system = load_system_document(args.system_json)
    elif args.order is None:
        raise ValueError("--order is required unless --system-json is given")
    else:
        system = build_system(args.order, args.rot, args.allow_impure)

    feasibility = integer_feasibility(system)
    result = {
        'order': system.order,
        'rotation': system.rotation,
        'rows': system.row_count,
        'unknowns': system.column_count,
        'rank': feasibility.rank,
        'verdict': feasibility.verdict.value,
    }
    if feasibility.verdict is Verdict.INTEGER_INFEASIBLE:
        obstruction = parity_obstruction(system, feasibility.certificate)
        result['certificate'] = [format_rational(y) for y in feasibility.certificate]
        result['obstruction'] = format_obstruction(obstruction.modulus, obstruction.constant, obstruction.coefficients)
    elif feasibility.verdict is Verdict.FEASIBLE:
        result['witness'] = {label: str(x) for label, x in zip(system.labels, feasibility.witness)}
    if args.relations:
        result['relations'] = [relation_text(rel) for rel in solved_relations(system)]

    emit(args, result)
    return EXIT_OK if feasibility.verdict is Verdict.FEASIBLE else EXIT_FINDING
