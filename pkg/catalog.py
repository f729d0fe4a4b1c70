"""Orders I whose Euler totient is small enough for a purely non-symplectic action."""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from exactmath import euler_phi

logger = logging.getLogger(__name__)


def scan_bound(cap: int) -> int:
    """
    Every I with phi(I) <= cap satisfies I <= 2 * (cap + 1)^2.

    phi(I) >= sqrt(I / 2): phi is multiplicative, and for a prime power
    p^k with p odd, phi(p^k) = p^(k-1) (p - 1) >= p^(k/2) because
    p - 1 >= sqrt(p); for p = 2, phi(2^k) = 2^(k-1) = sqrt(2^k / 2) * 2^((k-1)/2)
    >= sqrt(2^k / 2). So phi(I) <= cap forces I <= 2 cap^2.
    """
    return 2 * (cap + 1) ** 2


@dataclass(frozen=True)
class OrderTable:
    """totient value -> orders with that totient, descending."""

    cap: int
    rows: Dict[int, Tuple[int, ...]] = field(default_factory=dict)

    def row(self, phi: int) -> List[int]:
        return list(self.rows.get(phi, ()))

    def orders(self) -> List[int]:
        """All orders in the table, ascending."""
        return sorted(i for row in self.rows.values() for i in row)


def admissible_orders(cap: int = 21) -> OrderTable:
    """All I >= 2 with phi(I) <= cap, grouped by phi(I); computed, never tabulated."""
    if cap < 1:
        raise ValueError(f"totient cap must be >= 1, got: {cap}")
    rows: Dict[int, List[int]] = {}
    bound = scan_bound(cap)
    for i in range(2, bound + 1):
        phi = euler_phi(i)
        if phi <= cap:
            rows.setdefault(phi, []).append(i)
    # odd totients above 1 never occur: phi(I) is even for I >= 3
    table = OrderTable(cap, {phi: tuple(sorted(rows[phi], reverse=True)) for phi in sorted(rows, reverse=True)})
    logger.info(f"Order table for phi <= {cap}: {sum(len(r) for r in table.rows.values())} orders scanned up to {bound}")
    return table
