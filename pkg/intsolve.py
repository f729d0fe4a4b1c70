"""Deciding Lefschetz systems over Q and over Z.

Rational structure comes from the reduced row echelon form of [A | b];
integer solvability from the Smith normal form S A' T = D of the
denominator-cleared matrix. An infeasible system yields a rational row y
with y^T A' integral and y^T b' not, which is the certificate. It is read
off a reduced row whose coefficient gcd misses its constant when there is
one, so the obstruction stays small; otherwise it comes from the Smith form.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterator, List, Mapping, Optional, Protocol, Sequence, Tuple, Union

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

from exactmath import InvariantViolation
from lefschetz import CURVE_LABEL, FixedConfig, LefschetzSystem

logger = logging.getLogger(__name__)


class SystemLike(Protocol):
    labels: Tuple[str, ...]
    matrix: Tuple[Tuple[Fraction, ...], ...]
    rhs: Tuple[Fraction, ...]


@dataclass(frozen=True)
class LinearSystem:
    """A plain A u = rhs over Q, for systems that do not come from a fixed-point formula."""

    labels: Tuple[str, ...]
    matrix: Tuple[Tuple[Fraction, ...], ...]
    rhs: Tuple[Fraction, ...]

    def resolve_label(self, label: str) -> int:
        """Column index of a label."""
        if label not in self.labels:
            raise ValueError(f"unknown label: {label}")
        return self.labels.index(label)


def linear_system(matrix: Sequence[Sequence[Union[int, Fraction]]], rhs: Sequence[Union[int, Fraction]],
                  labels: Optional[Sequence[str]] = None) -> LinearSystem:
    """A system over Q from int or Fraction entries; labels default to u_0, u_1, ..."""
    cols = len(matrix[0]) if matrix else 0
    if any(len(row) != cols for row in matrix):
        raise ValueError("matrix rows have different lengths")
    if len(rhs) != len(matrix):
        raise ValueError(f"matrix has {len(matrix)} rows but rhs has {len(rhs)} entries")
    labels = tuple(labels) if labels is not None else tuple(f"u_{j}" for j in range(cols))
    if len(labels) != cols:
        raise ValueError(f"{len(labels)} labels for {cols} columns")
    return LinearSystem(
        labels=labels,
        matrix=tuple(tuple(Fraction(c) for c in row) for row in matrix),
        rhs=tuple(Fraction(c) for c in rhs),
    )


class Verdict(str, Enum):
    RATIONAL_INCONSISTENT = 'RATIONAL_INCONSISTENT'
    INTEGER_INFEASIBLE = 'INTEGER_INFEASIBLE'
    FEASIBLE = 'FEASIBLE'


@dataclass(frozen=True)
class AffineSolution:
    """particular + span(homogeneous_basis), read off the reduced row echelon form."""

    pivot_columns: Tuple[int, ...]
    particular: Tuple[Fraction, ...]
    homogeneous_basis: Tuple[Tuple[Fraction, ...], ...]
    rank: int

    @property
    def free_columns(self) -> Tuple[int, ...]:
        return tuple(j for j in range(len(self.particular)) if j not in self.pivot_columns)


@dataclass(frozen=True)
class Feasibility:
    verdict: Verdict
    certificate: Optional[Tuple[Fraction, ...]] = None
    witness: Optional[Tuple[int, ...]] = None
    rank: Optional[int] = None

    def __post_init__(self):
        if (self.certificate is not None) != (self.verdict is Verdict.INTEGER_INFEASIBLE):
            raise ValueError("a certificate is present exactly for INTEGER_INFEASIBLE")
        if (self.witness is not None) != (self.verdict is Verdict.FEASIBLE):
            raise ValueError("a witness is present exactly for FEASIBLE")


@dataclass(frozen=True)
class LinearRelation:
    """sum coefficients[u] * u = constant."""

    coefficients: Mapping[str, Fraction] = field(default_factory=dict)
    constant: Fraction = Fraction(0)
    lead: Optional[str] = None


@dataclass(frozen=True)
class Obstruction:
    """q * (sum w_u u) = p with q prime and q not dividing p."""

    modulus: int
    constant: int
    coefficients: Dict[str, int]


def _to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _reduce(sys: SystemLike) -> Tuple[List[List[Fraction]], Tuple[int, ...]]:
    """Nonzero RREF rows of [A | b] and their pivot columns."""
    n = len(sys.labels)
    rows = [[QQ(c.numerator, c.denominator) for c in row] + [QQ(b.numerator, b.denominator)]
            for row, b in zip(sys.matrix, sys.rhs)]
    if not rows:
        return [], ()
    reduced, pivots = DomainMatrix(rows, (len(rows), n + 1), QQ).rref()
    reduced_rows = [[_to_fraction(x) for x in row] for row in reduced.to_list()]
    return reduced_rows[:len(pivots)], tuple(pivots)


def rational_solve(sys: SystemLike) -> Union[AffineSolution, Verdict]:
    """Exact solution set over Q, or RATIONAL_INCONSISTENT."""
    n = len(sys.labels)
    reduced, pivots = _reduce(sys)
    if n in pivots:
        logger.info("System is inconsistent over Q")
        return Verdict.RATIONAL_INCONSISTENT

    particular = [Fraction(0)] * n
    for row, p in zip(reduced, pivots):
        particular[p] = row[n]
    basis = []
    for f in range(n):
        if f in pivots:
            continue
        h = [Fraction(0)] * n
        h[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            h[p] = -row[f]
        basis.append(tuple(h))

    solution = AffineSolution(tuple(pivots), tuple(particular), tuple(basis), len(pivots))
    _check_solution(sys, solution)
    logger.debug(f"Rational solve: rank {solution.rank}, {len(basis)} free columns")
    return solution


def _matvec(matrix: Sequence[Sequence[Fraction]], u: Sequence[Fraction]) -> List[Fraction]:
    return [sum((a * x for a, x in zip(row, u)), Fraction(0)) for row in matrix]


def _check_solution(sys: SystemLike, solution: AffineSolution) -> None:
    if _matvec(sys.matrix, solution.particular) != list(sys.rhs):
        raise InvariantViolation("particular solution does not satisfy the system")
    zero = [Fraction(0)] * len(sys.rhs)
    for h in solution.homogeneous_basis:
        if _matvec(sys.matrix, h) != zero:
            raise InvariantViolation("homogeneous basis vector is not in the kernel")
    if solution.rank + len(solution.homogeneous_basis) != len(sys.labels):
        raise InvariantViolation("rank + nullity differs from the column count")


def clear_denominators(sys: SystemLike) -> Tuple[List[List[int]], List[int]]:
    """Scale each row of [A | b] by the LCM of its denominators."""
    A, b = [], []
    for row, rhs in zip(sys.matrix, sys.rhs):
        scale = lcm(rhs.denominator, *(c.denominator for c in row))
        A.append([int(c * scale) for c in row])
        b.append(int(rhs * scale))
    return A, b


def _smallest_prime_factor(q: int) -> int:
    p = 2
    while p * p <= q:
        if q % p == 0:
            return p
        p += 1
    return q


def _row_certificate(A: List[List[int]], b: List[int], n: int) -> Optional[Tuple[Fraction, ...]]:
    """
    Certificate from the first reduced row c*u = beta with gcd(c) not dividing beta.
    Reducing [A' | b' | I] keeps track of which combination of rows of A' gives that row.
    """
    m = len(A)
    rows = [[QQ(x) for x in A[i]] + [QQ(b[i])] + [QQ(int(i == k)) for k in range(m)] for i in range(m)]
    reduced, pivots = DomainMatrix(rows, (m, n + 1 + m), QQ).rref()
    for row, p in zip(reduced.to_list(), pivots):
        if p >= n:
            break
        row = [_to_fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in row[:n + 1]))
        coefficients = [int(x * scale) for x in row[:n]]
        constant = int(row[n] * scale)
        g = gcd(*coefficients)
        if constant % g:
            q = g // gcd(constant, g)
            factor = Fraction(scale * (q // _smallest_prime_factor(q)), g)
            return tuple(x * factor for x in row[n + 1:])
    return None


def integer_feasibility(sys: SystemLike) -> Feasibility:
    """Decide whether A u = rhs has an integer solution, with a certificate either way."""
    solution = rational_solve(sys)
    if solution is Verdict.RATIONAL_INCONSISTENT:
        return Feasibility(Verdict.RATIONAL_INCONSISTENT)

    A, b = clear_denominators(sys)
    m, n = len(A), len(sys.labels)
    if n == 0 or m == 0:
        return Feasibility(Verdict.FEASIBLE, witness=tuple([0] * n), rank=solution.rank)

    y = _row_certificate(A, b, n)
    if y is not None:
        if not check_certificate(sys, y):
            raise InvariantViolation("certificate read off a reduced row does not verify")
        logger.info(f"Integer infeasible (rank {solution.rank}), certificate from a reduced row")
        return Feasibility(Verdict.INTEGER_INFEASIBLE, certificate=y, rank=solution.rank)

    dm = DomainMatrix([[ZZ(c) for c in row] for row in A], (m, n), ZZ)
    D, S, T = smith_normal_decomp(dm)
    if (S * dm * T).to_list() != D.to_list():
        raise InvariantViolation("Smith decomposition does not reproduce the matrix")
    D = [[int(x) for x in row] for row in D.to_list()]
    S = [[int(x) for x in row] for row in S.to_list()]
    T = [[int(x) for x in row] for row in T.to_list()]
    c = [sum(s * v for s, v in zip(row, b)) for row in S]

    v = [0] * n
    for i in range(m):
        d = abs(D[i][i]) if i < n else 0
        if d == 0:
            if c[i] != 0:
                raise InvariantViolation("Smith form reports an inconsistency the rational solve missed")
            continue
        if c[i] % d:
            # y = S_i / d gives y^T A' = row i of T^-1; shrink the modulus to a prime
            q = d // gcd(c[i], d)
            scale = q // _smallest_prime_factor(q)
            y = tuple(Fraction(s * scale, d) for s in S[i])
            if not check_certificate(sys, y):
                raise InvariantViolation("constructed certificate does not verify")
            logger.info(f"Integer infeasible (rank {solution.rank}), certificate from invariant factor {d}")
            return Feasibility(Verdict.INTEGER_INFEASIBLE, certificate=y, rank=solution.rank)
        v[i] = c[i] // D[i][i]

    witness = tuple(sum(t * x for t, x in zip(row, v)) for row in T)
    if list(sys.rhs) != _matvec(sys.matrix, [Fraction(x) for x in witness]):
        raise InvariantViolation("integer witness does not satisfy the system")
    logger.info(f"Integer feasible (rank {solution.rank})")
    return Feasibility(Verdict.FEASIBLE, witness=witness, rank=solution.rank)


def check_certificate(sys: SystemLike, y: Sequence[Fraction]) -> bool:
    """True iff y^T A' is integral and y^T b' is not, for the denominator-cleared system."""
    A, b = clear_denominators(sys)
    if len(y) != len(A):
        raise ValueError(f"certificate has {len(y)} entries, system has {len(A)} rows")
    y = [Fraction(x) for x in y]
    for j in range(len(sys.labels)):
        if sum((yi * row[j] for yi, row in zip(y, A)), Fraction(0)).denominator != 1:
            return False
    return sum((yi * bi for yi, bi in zip(y, b)), Fraction(0)).denominator != 1


def parity_obstruction(sys: SystemLike, certificate: Sequence[Fraction]) -> Obstruction:
    """Restate a certificate as q * (sum w_u u) = p with q not dividing p."""
    A, b = clear_denominators(sys)
    y = [Fraction(x) for x in certificate]
    w = [sum((yi * row[j] for yi, row in zip(y, A)), Fraction(0)) for j in range(len(sys.labels))]
    target = sum((yi * bi for yi, bi in zip(y, b)), Fraction(0))
    if target.denominator == 1 or any(x.denominator != 1 for x in w):
        raise ValueError("not an infeasibility certificate for this system")
    q = target.denominator
    return Obstruction(
        modulus=q,
        constant=target.numerator,
        coefficients={label: int(x) for label, x in zip(sys.labels, w) if x},
    )


def _relation_vector(sys, rel: LinearRelation) -> List[Fraction]:
    n = len(sys.labels)
    vec = [Fraction(0)] * (n + 1)
    for label, c in rel.coefficients.items():
        vec[sys.resolve_label(label)] += Fraction(c)
    vec[n] = Fraction(rel.constant)
    return vec


def relation_implied(sys: SystemLike, rel: LinearRelation) -> bool:
    """True iff the relation holds on every rational solution of the system."""
    vec = _relation_vector(sys, rel)
    reduced, pivots = _reduce(sys)
    for row, p in zip(reduced, pivots):
        if vec[p]:
            f = vec[p]
            vec = [x - f * r for x, r in zip(vec, row)]
    return not any(vec)


def solved_relations(sys: SystemLike) -> List[LinearRelation]:
    """One integer relation per pivot: c * pivot = constant - sum(...)."""
    solution = rational_solve(sys)
    if solution is Verdict.RATIONAL_INCONSISTENT:
        return []
    n = len(sys.labels)
    reduced, pivots = _reduce(sys)
    out = []
    for row, p in zip(reduced, pivots):
        scale = lcm(*(x.denominator for x in row))
        coefficients = {sys.labels[j]: row[j] * scale for j in range(n) if row[j]}
        out.append(LinearRelation(coefficients, row[n] * scale, lead=sys.labels[p]))
    return out


def nonneg_enumerate(sys: LefschetzSystem, max_points: int,
                     n_range: Tuple[int, int] = (0, 0)) -> List[FixedConfig]:
    """
    All solutions with m_t >= 0, sum m_t <= max_points and n in n_range,
    in lexicographic order of (m_t..., n).
    Free columns are enumerated; pivot columns are read off the echelon form.
    """
    if max_points < 0:
        raise ValueError(f"max_points must be >= 0, got: {max_points}")
    lo, hi = n_range
    if lo > hi:
        raise ValueError(f"empty n range: [{lo}, {hi}]")
    solution = rational_solve(sys)
    if solution is Verdict.RATIONAL_INCONSISTENT:
        return []

    n = sys.column_count
    curve_col = sys.labels.index(CURVE_LABEL) if sys.has_curve_term else None
    reduced, pivots = _reduce(sys)
    # integer form of each pivot row: scale * u_p = beta - sum(coef_f * u_f)
    free = solution.free_columns
    pivot_rows = []
    for row, p in zip(reduced, pivots):
        scale = lcm(*(x.denominator for x in row))
        pivot_rows.append((p, int(scale), int(row[n] * scale), [(f, int(row[f] * scale)) for f in free if row[f]]))

    found = []
    u = [0] * n

    def assignments(k: int, budget: int) -> Iterator[None]:
        if k == len(free):
            yield None
            return
        col = free[k]
        values = range(lo, hi + 1) if col == curve_col else range(0, budget + 1)
        for value in values:
            u[col] = value
            yield from assignments(k + 1, budget if col == curve_col else budget - value)
        u[col] = 0

    for _ in assignments(0, max_points):
        ok = True
        for p, scale, beta, terms in pivot_rows:
            num = beta - sum(c * u[f] for f, c in terms)
            if num % scale:
                ok = False
                break
            u[p] = num // scale
            if p == curve_col:
                if not lo <= u[p] <= hi:
                    ok = False
                    break
            elif u[p] < 0:
                ok = False
                break
        if not ok:
            continue
        total = sum(x for j, x in enumerate(u) if j != curve_col)
        if total <= max_points:
            found.append(tuple(u))

    found.sort()
    configs = []
    for vec in found:
        multiplicities = {t: vec[j] for j, t in enumerate(sys.types) if vec[j]}
        curve_n = vec[curve_col] if curve_col is not None else None
        configs.append(FixedConfig(multiplicities, curve_n))
    logger.info(f"Enumerated {len(configs)} nonnegative configurations with at most {max_points} points")
    return configs
