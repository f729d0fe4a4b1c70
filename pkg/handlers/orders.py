"""`orders`: the table of orders with small totient, optionally analysed."""
import argparse
import asyncio
import logging
from typing import List, Tuple

from catalog import admissible_orders
from config import DEFAULT_MAX_PHI, SWEEP_CONCURRENCY
from intsolve import Verdict, integer_feasibility
from lefschetz import build_system
from handlers.common import EXIT_FINDING, EXIT_OK, add_format_arg, emit

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    """Add the orders subcommand."""
    parser = subparsers.add_parser('orders', help="orders I >= 2 with phi(I) <= K, grouped by phi(I)")
    parser.add_argument('--max-phi', type=int, default=DEFAULT_MAX_PHI, help="totient cap K (default %(default)s)")
    parser.add_argument(
        '--analyze-all', action='store_true',
        help="run the integer feasibility analysis at rotation 1 for every order in the table",
    )
    add_format_arg(parser)
    parser.set_defaults(handler=handle)


def _analyze_order(order: int) -> str:
    """Verdict for (order, 1), run in a worker thread."""
    return integer_feasibility(build_system(order, 1)).verdict.value


async def sweep(orders: List[int], concurrency: int = SWEEP_CONCURRENCY) -> List[Tuple[int, str]]:
    """Analyse orders concurrently; results come back in ascending order."""
    semaphore = asyncio.Semaphore(concurrency)

    async def analyze(order: int) -> Tuple[int, str]:
        async with semaphore:
            logger.info(f"Analysing order {order}")
            verdict = await asyncio.to_thread(_analyze_order, order)
            logger.info(f"Order {order}: {verdict}")
            return order, verdict

    return list(await asyncio.gather(*(analyze(order) for order in sorted(orders))))


def handle(args: argparse.Namespace) -> int:
    """Print the totient table, optionally with a verdict per order."""
    table = admissible_orders(args.max_phi)
    result = {
        'max_phi': table.cap,
        'rows': [{'phi': phi, 'orders': list(orders)} for phi, orders in table.rows.items()],
    }
    code = EXIT_OK
    if args.analyze_all:
        verdicts = asyncio.run(sweep(table.orders()))
        result['analysis'] = [{'order': order, 'rotation': 1, 'verdict': verdict} for order, verdict in verdicts]
        if any(verdict != Verdict.FEASIBLE.value for _, verdict in verdicts):
            code = EXIT_FINDING
    emit(args, result)
    return code
