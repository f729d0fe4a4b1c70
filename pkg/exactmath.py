"""Exact rational, polynomial and cyclotomic-field arithmetic.

Everything here is exact: rationals are ``fractions.Fraction``, polynomials
are dense coefficient tuples over them, and the field Q(zeta_N) is the
quotient Q[x]/Phi_N(x) with elements stored in the power basis
1, zeta, ..., zeta^(phi(N)-1).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Tuple, Union

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class InvariantViolation(RuntimeError):
    """An internal self-check failed (a bug, never bad input)."""


def euler_phi(n: int) -> int:
    """Number of 1 <= k <= n with gcd(k, n) = 1; phi(1) = 1."""
    if n <= 0:
        raise ValueError(f"euler_phi needs n >= 1, got: {n}")
    result = n
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def divisors(n: int) -> List[int]:
    """Positive divisors of n in ascending order."""
    if n <= 0:
        raise ValueError(f"divisors needs n >= 1, got: {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


class IntPoly:
    """Dense univariate polynomial over Q; ``coeffs[i]`` is the coefficient of x^i."""

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def one(cls) -> IntPoly:
        """The constant polynomial 1."""
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> IntPoly:
        """c * x^k."""
        if k < 0:
            raise ValueError(f"monomial degree must be >= 0, got: {k}")
        return cls([0] * k + [c])

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        """Coefficients from x^0 up, without trailing zeros."""
        return self._coeffs

    @property
    def degree(self) -> int:
        """Highest index with a nonzero coefficient; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of x^i, zero outside the stored range."""
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        """True for the zero polynomial."""
        return not self._coeffs

    def is_monic(self) -> bool:
        """Leading coefficient is 1."""
        return bool(self._coeffs) and self._coeffs[-1] == 1

    def has_integer_coefficients(self) -> bool:
        """Every coefficient is an integer."""
        return all(c.denominator == 1 for c in self._coeffs)

    def __eq__(self, other: object) -> bool:
        """Coefficient-wise equality with another IntPoly."""
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({[str(c) for c in self._coeffs]})"

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self._coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        """Coefficient-wise sum."""
        n = max(len(self._coeffs), len(other._coeffs))
        return IntPoly(self.coefficient(i) + other.coefficient(i) for i in range(n))

    def __sub__(self, other: IntPoly) -> IntPoly:
        """Coefficient-wise difference."""
        n = max(len(self._coeffs), len(other._coeffs))
        return IntPoly(self.coefficient(i) - other.coefficient(i) for i in range(n))

    def __mul__(self, other: Union[IntPoly, Scalar]) -> IntPoly:
        """Product with a polynomial or a scalar."""
        if not isinstance(other, IntPoly):
            return IntPoly(c * other for c in self._coeffs)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: IntPoly) -> Tuple[IntPoly, IntPoly]:
        """Quotient and remainder of long division by a nonzero polynomial."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dq = other.degree
        lead = other._coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for shift in range(len(rem) - 1 - dq, -1, -1):
            c = rem[shift + dq] / lead
            if c:
                quot[shift] = c
                for i, oc in enumerate(other._coeffs):
                    rem[shift + i] -= c * oc
        return IntPoly(quot), IntPoly(rem)

    def __floordiv__(self, other: IntPoly) -> IntPoly:
        """Quotient of long division."""
        return divmod(self, other)[0]

    def __mod__(self, other: IntPoly) -> IntPoly:
        """Remainder of long division."""
        return divmod(self, other)[1]


def invert_mod(u: IntPoly, modulus: IntPoly) -> IntPoly:
    """Inverse of u modulo ``modulus`` by the extended Euclidean algorithm."""
    r0, r1 = modulus, u % modulus
    s0, s1 = IntPoly(), IntPoly.one()
    # s_k * u == r_k (mod modulus) throughout
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise ZeroDivisionError("element is not invertible modulo the given polynomial")
    return (s0 * (1 / r0.coeffs[0])) % modulus


def _int_mul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _int_divmod_monic(num: List[int], den: List[int]) -> Tuple[List[int], List[int]]:
    rem = list(num)
    dq = len(den) - 1
    quot = [0] * (len(rem) - dq)
    for shift in range(len(rem) - 1 - dq, -1, -1):
        c = rem[shift + dq]
        if c:
            quot[shift] = c
            for i, d in enumerate(den):
                rem[shift + i] -= c * d
    return quot, rem[:dq]


@lru_cache(maxsize=None)
def _cyclotomic_ints(n: int) -> Tuple[int, ...]:
    numerator = [-1] + [0] * (n - 1) + [1]
    denominator = [1]
    for d in divisors(n)[:-1]:
        denominator = _int_mul(denominator, list(_cyclotomic_ints(d)))
    # every Phi_d is monic, so the division stays in Z
    quotient, remainder = _int_divmod_monic(numerator, denominator)
    if any(remainder):
        raise InvariantViolation(f"x^{n} - 1 is not divisible by the product of Phi_d, d | {n}, d < {n}")
    if len(quotient) - 1 != euler_phi(n) or quotient[-1] != 1:
        raise InvariantViolation(f"Phi_{n} has degree {len(quotient) - 1}, expected {euler_phi(n)}")
    return tuple(quotient)


def cyclotomic_poly(n: int) -> IntPoly:
    """Phi_n = (x^n - 1) / prod(Phi_d for d | n, d < n), by exact division."""
    if n <= 0:
        raise ValueError(f"cyclotomic_poly needs N >= 1, got: {n}")
    return IntPoly(_cyclotomic_ints(n))


@dataclass(frozen=True)
class CyclotomicField:
    """Q(zeta_N) realised as Q[x]/Phi_N(x)."""

    order: int
    modulus: IntPoly = field(compare=False, repr=False)
    degree: int = field(compare=False)

    def element(self, coords: Iterable[Scalar]) -> CycElt:
        return CycElt(self, tuple(Fraction(c) for c in coords))

    def from_poly(self, p: IntPoly) -> CycElt:
        r = p % self.modulus
        return CycElt(self, tuple(r.coefficient(i) for i in range(self.degree)))

    def scalar(self, c: Scalar) -> CycElt:
        return self.element([c] + [0] * (self.degree - 1))

    def zero(self) -> CycElt:
        return self.scalar(0)

    def one(self) -> CycElt:
        return self.scalar(1)

    def zeta(self, k: int = 1) -> CycElt:
        return elt_from_power(self, k)


@lru_cache(maxsize=None)
def cyclotomic_field(n: int) -> CyclotomicField:
    """The (cached) field Q(zeta_n)."""
    modulus = cyclotomic_poly(n)
    logger.debug(f"Built Q(zeta_{n}) of degree {modulus.degree}")
    return CyclotomicField(order=n, modulus=modulus, degree=modulus.degree)


@dataclass(frozen=True)
class CycElt:
    """Element of a cyclotomic field in power-basis coordinates."""

    field: CyclotomicField
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.field.degree:
            raise ValueError(
                f"Q(zeta_{self.field.order}) elements have {self.field.degree} coordinates, "
                f"got: {len(self.coords)}"
            )

    def _check(self, other: CycElt) -> None:
        if not isinstance(other, CycElt) or other.field != self.field:
            raise ValueError("operands belong to different cyclotomic fields")

    def to_poly(self) -> IntPoly:
        return IntPoly(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_one(self) -> bool:
        return self.coords[0] == 1 and not any(self.coords[1:])

    def __add__(self, other: CycElt) -> CycElt:
        self._check(other)
        return CycElt(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: CycElt) -> CycElt:
        self._check(other)
        return CycElt(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> CycElt:
        return CycElt(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other: Union[CycElt, Scalar]) -> CycElt:
        if isinstance(other, (int, Fraction)):
            return CycElt(self.field, tuple(a * other for a in self.coords))
        self._check(other)
        return self.field.from_poly(self.to_poly() * other.to_poly())

    def __rmul__(self, other: Scalar) -> CycElt:
        return self * other

    def inverse(self) -> CycElt:
        if self.is_zero():
            raise ZeroDivisionError(f"zero has no inverse in Q(zeta_{self.field.order})")
        return self.field.from_poly(invert_mod(self.to_poly(), self.field.modulus))

    def __truediv__(self, other: Union[CycElt, Scalar]) -> CycElt:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a field element by zero")
            return self * (1 / Fraction(other))
        return self * other.inverse()


@lru_cache(maxsize=4096)
def _power_remainder(n: int, k: int) -> IntPoly:
    return IntPoly.monomial(k) % cyclotomic_poly(n)


def elt_from_power(F: CyclotomicField, k: int) -> CycElt:
    """zeta^k; negative k is normalised to k mod N before reduction."""
    return F.from_poly(_power_remainder(F.order, k % F.order))


def elt_arith(u: CycElt, v: CycElt, op: str) -> CycElt:
    """Apply ``op`` in {'add', 'sub', 'mul'} to two elements of one field."""
    if op == 'add':
        return u + v
    if op == 'sub':
        return u - v
    if op == 'mul':
        return u * v
    raise ValueError(f"unknown field operation: {op}")


def elt_inv(u: CycElt) -> CycElt:
    """u^-1; raises ZeroDivisionError for zero."""
    return u.inverse()
