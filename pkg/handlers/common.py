"""Common pieces of the subcommand handlers."""
import argparse
import logging
from typing import Any, Dict

from intsolve import LinearRelation
from report import Report
from utils import format_rational, format_solved_form

logger = logging.getLogger(__name__)

# Exit codes
EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVARIANT = 3
# Infeasibility and FAIL are findings, not errors
EXIT_FINDING = 10


def add_order_args(parser: argparse.ArgumentParser, required: bool = True) -> None:
    """--order N, --rot R (default 1) and --allow-impure."""
    parser.add_argument('--order', type=int, required=required, help="order N of the automorphism")
    parser.add_argument(
        '--rot', type=int, default=1,
        help="g*omega = zeta^R omega; 1 is the purely non-symplectic generator, 0 the symplectic case",
    )
    parser.add_argument(
        '--allow-impure', action='store_true',
        help="accept R not coprime to N (not a purely non-symplectic action)",
    )


def add_format_arg(parser: argparse.ArgumentParser) -> None:
    """--format text|json."""
    parser.add_argument('--format', choices=['text', 'json'], default='text', help="output format")


def command_echo(args: argparse.Namespace) -> str:
    """The command line as typed, for the report header."""
    return " ".join(getattr(args, 'argv', None) or [args.command])


def emit(args: argparse.Namespace, result: Dict[str, Any]) -> None:
    """Print the report for this invocation on stdout."""
    report = Report(command=command_echo(args), result=result, format=getattr(args, 'format', 'text'))
    print(report.render())


def relation_text(rel: LinearRelation) -> str:
    """c*lead = constant + ... with every other unknown on the right."""
    lead = rel.lead if rel.lead in rel.coefficients else next(iter(rel.coefficients), None)
    if lead is None:
        return f"0 = {format_rational(rel.constant)}"
    others = {label: c for label, c in rel.coefficients.items() if label != lead}
    return format_solved_form(lead, rel.coefficients[lead], rel.constant, others)
