"""Holomorphic Lefschetz data of an order-N automorphism with g*omega = zeta^r omega.

The two sides of the fixed-point formula are assembled as elements of
Q(zeta_N); equating them coordinate-wise in the power basis gives a linear
system in the isolated-point multiplicities m_{a,b} and the curve term n.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from exactmath import CycElt, CyclotomicField, cyclotomic_field, elt_from_power
from utils import format_rational

logger = logging.getLogger(__name__)

CURVE_LABEL = 'n'


@dataclass(frozen=True, order=True)
class FixedPointType:
    """Tangent exponents {a, b} (a <= b) of an isolated fixed point."""

    a: int
    b: int
    order: int
    rotation: int

    def __post_init__(self):
        if not 1 <= self.a <= self.b <= self.order - 1:
            raise ValueError(f"fixed point type needs 1 <= a <= b <= N-1, got: {{{self.a},{self.b}}} for N={self.order}")
        if (self.a + self.b - self.rotation) % self.order:
            raise ValueError(
                f"fixed point type {{{self.a},{self.b}}} violates a + b = r (mod {self.order}) for r={self.rotation}"
            )

    @property
    def label(self) -> str:
        return f"m_{self.a}_{self.b}"

    @property
    def alias_index(self) -> Optional[int]:
        """The index j of the (zeta^-j, zeta^(j+1)) convention, for r = 1 and N even."""
        if self.rotation != 1 or self.order % 2:
            return None
        j = self.a - 1
        return j if self.b == self.order - j else None

    @property
    def alias(self) -> Optional[str]:
        j = self.alias_index
        return f"m_{j}" if j is not None else None


@dataclass(frozen=True)
class FixedConfig:
    """Multiplicities of isolated fixed point types plus the curve term n."""

    multiplicities: Mapping[FixedPointType, int] = field(default_factory=dict)
    curve_n: Optional[int] = None

    def __post_init__(self):
        for t, m in self.multiplicities.items():
            if m < 0:
                raise ValueError(f"multiplicity of {t.label} must be >= 0, got: {m}")

    @property
    def total_points(self) -> int:
        return sum(self.multiplicities.values())

    def as_dict(self) -> Dict[str, int]:
        out = {t.label: m for t, m in sorted(self.multiplicities.items())}
        if self.curve_n is not None:
            out[CURVE_LABEL] = self.curve_n
        return out


@dataclass(frozen=True)
class LefschetzSystem:
    """A u = rhs over Q, one row per power-basis coordinate."""

    order: int
    rotation: int
    types: Tuple[FixedPointType, ...]
    labels: Tuple[str, ...]
    matrix: Tuple[Tuple[Fraction, ...], ...]
    rhs: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.matrix) != len(self.rhs):
            raise ValueError(f"matrix has {len(self.matrix)} rows but rhs has {len(self.rhs)} entries")
        for row in self.matrix:
            if len(row) != len(self.labels):
                raise ValueError(f"matrix row has {len(row)} entries, expected {len(self.labels)}")

    @property
    def has_curve_term(self) -> bool:
        return CURVE_LABEL in self.labels

    @property
    def row_count(self) -> int:
        return len(self.matrix)

    @property
    def column_count(self) -> int:
        return len(self.labels)

    @property
    def aliases(self) -> Dict[str, str]:
        return {t.label: t.alias for t in self.types if t.alias is not None}

    def resolve_label(self, label: str) -> int:
        """Column index of a canonical label, an index alias m_j or n."""
        if label in self.labels:
            return self.labels.index(label)
        for t in self.types:
            if t.alias == label:
                return self.labels.index(t.label)
        raise ValueError(f"unknown label for N={self.order}, r={self.rotation}: {label}")

    def config_vector(self, cfg: FixedConfig) -> List[int]:
        u = [0] * self.column_count
        for t, m in cfg.multiplicities.items():
            if t.label not in self.labels:
                raise ValueError(f"type {t.label} does not belong to N={self.order}, r={self.rotation}")
            u[self.labels.index(t.label)] = m
        if cfg.curve_n:
            if not self.has_curve_term:
                raise ValueError("symplectic systems have no curve term")
            u[self.labels.index(CURVE_LABEL)] = cfg.curve_n
        return u

    def residual(self, u: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        """A u - rhs."""
        if len(u) != self.column_count:
            raise ValueError(f"vector has {len(u)} entries, expected {self.column_count}")
        return tuple(sum((a * x for a, x in zip(row, u)), Fraction(0)) - b for row, b in zip(self.matrix, self.rhs))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'order': self.order,
            'rotation': self.rotation,
            'labels': list(self.labels),
            'aliases': self.aliases,
            'matrix': [[format_rational(c) for c in row] for row in self.matrix],
            'rhs': [format_rational(c) for c in self.rhs],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> LefschetzSystem:
        """Rebuild a system from to_dict() output; entries must be exact (strings or integers)."""
        try:
            order = int(data['order'])
            rotation = int(data['rotation'])
            labels = tuple(str(label) for label in data['labels'])
            matrix = tuple(tuple(_exact(c) for c in row) for row in data['matrix'])
            rhs = tuple(_exact(c) for c in data['rhs'])
        except (KeyError, TypeError) as e:
            raise ValueError(f"malformed system document: {e}")
        types = []
        for label in labels:
            if label == CURVE_LABEL:
                continue
            parts = label.split('_')
            if len(parts) != 3 or parts[0] != 'm':
                raise ValueError(f"malformed unknown label in system document: {label}")
            types.append(FixedPointType(int(parts[1]), int(parts[2]), order, rotation))
        return cls(order, rotation, tuple(types), labels, matrix, rhs)


def _exact(value: Any) -> Fraction:
    # exact inputs only; bool is an int subclass
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ValueError(f"system entries must be strings or integers, got: {value!r}")
    return Fraction(value)


def enumerate_point_types(N: int, r: int) -> List[FixedPointType]:
    """All {a, b} with 1 <= a <= b <= N-1 and a + b = r (mod N), ascending."""
    if N < 2:
        raise ValueError(f"order must be >= 2, got: {N}")
    if not 0 <= r <= N - 1:
        raise ValueError(f"rotation must satisfy 0 <= r <= N-1, got: r={r} for N={N}")
    types = []
    for a in range(1, N):
        b = (r - a) % N
        if b >= a:
            types.append(FixedPointType(a, b, N, r))
    return types


@lru_cache(maxsize=None)
def _inverse_one_minus_power(order: int, k: int) -> CycElt:
    F = cyclotomic_field(order)
    return (F.one() - elt_from_power(F, k)).inverse()


def point_term(F: CyclotomicField, t: FixedPointType) -> CycElt:
    """a(P) = 1 / ((1 - zeta^a)(1 - zeta^b))."""
    if t.order != F.order:
        raise ValueError(f"type {t.label} is for N={t.order}, field is Q(zeta_{F.order})")
    return _inverse_one_minus_power(F.order, t.a % F.order) * _inverse_one_minus_power(F.order, t.b % F.order)


def curve_term(F: CyclotomicField, r: int) -> CycElt:
    """Coefficient (1 + zeta^r) / (1 - zeta^r)^2 of the aggregated curve unknown n."""
    if r % F.order == 0:
        raise ValueError("symplectic case has no curve term")
    inv = _inverse_one_minus_power(F.order, r % F.order)
    return (F.one() + elt_from_power(F, r)) * inv * inv


def global_term(F: CyclotomicField, r: int) -> CycElt:
    """L(g) = 1 + zeta^(-r) from the cohomology of the structure sheaf."""
    if not 0 <= r <= F.order - 1:
        raise ValueError(f"rotation must satisfy 0 <= r <= N-1, got: r={r} for N={F.order}")
    return F.one() + elt_from_power(F, -r)


def check_order_rotation(N: int, r: int, allow_impure: bool = False) -> None:
    if N < 2:
        raise ValueError(f"order must be >= 2, got: {N}")
    if not 0 <= r <= N - 1:
        raise ValueError(f"rotation must satisfy 0 <= r <= N-1, got: r={r} for N={N}")
    if r != 0 and gcd(r, N) != 1 and not allow_impure:
        raise ValueError(
            f"rotation r={r} is not coprime to N={N}: the action on omega is not purely non-symplectic "
            f"(pass allow_impure to analyse it anyway)"
        )


@lru_cache(maxsize=None)
def build_system(N: int, r: int, allow_impure: bool = False) -> LefschetzSystem:
    """Equate sum m_t a(t) + n b(r) with 1 + zeta^(-r) in the power basis."""
    check_order_rotation(N, r, allow_impure)
    F = cyclotomic_field(N)
    types = enumerate_point_types(N, r)
    columns = [point_term(F, t).coords for t in types]
    labels = [t.label for t in types]
    if r != 0:
        columns.append(curve_term(F, r).coords)
        labels.append(CURVE_LABEL)
    rhs = global_term(F, r).coords
    matrix = tuple(tuple(col[i] for col in columns) for i in range(F.degree))
    system = LefschetzSystem(N, r, tuple(types), tuple(labels), matrix, rhs)
    logger.info(f"Built Lefschetz system for N={N}, r={r}: {system.row_count} rows, {system.column_count} unknowns")
    return system


def verify_fixed_config(N: int, r: int, cfg: FixedConfig) -> CycElt:
    """sum m_t a(t) + n b(r) - (1 + zeta^(-r)); zero iff cfg satisfies the formula."""
    if N < 2 or not 0 <= r <= N - 1:
        raise ValueError(f"invalid order/rotation: N={N}, r={r}")
    F = cyclotomic_field(N)
    total = F.zero()
    for t, m in cfg.multiplicities.items():
        if t.order != N or t.rotation != r:
            raise ValueError(f"type {t.label} (N={t.order}, r={t.rotation}) is inconsistent with N={N}, r={r}")
        if m:
            total = total + point_term(F, t) * m
    if cfg.curve_n:
        if r == 0:
            raise ValueError("symplectic automorphisms have no pointwise-fixed curves; curve term must be absent")
        total = total + curve_term(F, r) * cfg.curve_n
    return total - global_term(F, r)
