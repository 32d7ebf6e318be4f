"""p-adic valuations and absolute values on Q, and the places of Q(x).

Valuations are plain ``int`` for nonzero elements and the singleton
:data:`INF` for zero. Absolute values are :class:`AbsValue`, which keeps
the exponent ``k`` of ``p**k`` and never a float.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .numeric import Poly, RationalFunction, factor_multiplicity, rational

__all__ = [
    "INF",
    "Infinity",
    "Valuation",
    "vmin",
    "PAdicContext",
    "AbsValue",
    "vp_int",
    "vp_rat",
    "abs_p",
    "dist_p",
    "vfunc_px",
    "vfunc_inf",
    "FinitePlace",
    "InfinitePlace",
    "MembershipReport",
    "ring_membership",
    "valuation_to_json",
]


class Infinity:
    """The valuation of zero: larger than every integer, absorbing under ``+``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    __str__ = __repr__

    def __reduce__(self):
        return (Infinity, ())

    def __hash__(self) -> int:
        return hash("ultraspec.INF")

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def __add__(self, other):
        if isinstance(other, (int, Infinity)) and not isinstance(other, bool):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Infinity):
            raise ArithmeticError("INF - INF is undefined")
        if isinstance(other, int):
            return self
        return NotImplemented

    def __rsub__(self, other):
        raise ArithmeticError("finite - INF is undefined")


INF = Infinity()
Valuation = Union[int, Infinity]


def vmin(a: Valuation, b: Valuation) -> Valuation:
    return b if a is INF else (a if b is INF else min(a, b))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PAdicContext:
    p: int

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"p must be a prime, got {self.p!r}")


@functools.lru_cache(maxsize=64)
def _ctx_for(p: int) -> PAdicContext:
    return PAdicContext(p)


def _ctx(ctx) -> PAdicContext:
    return ctx if isinstance(ctx, PAdicContext) else _ctx_for(ctx)


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class AbsValue:
    """Exact element of {p**k : k in Z} together with 0.

    ``k is None`` encodes the zero absolute value. Comparisons only make
    sense between values for the same prime and are exact integer
    comparisons on exponents.
    """

    p: int
    k: int | None

    @classmethod
    def zero(cls, p: int) -> AbsValue:
        return cls(p, None)

    @classmethod
    def ppow(cls, p: int, k: int) -> AbsValue:
        return cls(p, k)

    @classmethod
    def from_rational(cls, p: int, r) -> AbsValue:
        """Inverse of :attr:`value`; r must be 0 or an integral power of p."""
        r = rational(r)
        if r == 0:
            return cls(p, None)
        if r < 0:
            raise ValueError("absolute values are non-negative")
        k = vp_rat(p, r)
        if Fraction(p) ** k != r:
            raise ValueError(f"{r} is not in the value group of |.|_{p}")
        return cls(p, k)

    def is_zero(self) -> bool:
        return self.k is None

    @property
    def value(self) -> Fraction:
        if self.k is None:
            return Fraction(0)
        return Fraction(self.p) ** self.k

    @property
    def valuation(self) -> Valuation:
        return INF if self.k is None else -self.k

    def _check(self, other) -> AbsValue:
        if not isinstance(other, AbsValue):
            return NotImplemented
        if other.p != self.p:
            raise ValueError(f"cannot compare |.|_{self.p} with |.|_{other.p}")
        return other

    def __eq__(self, other) -> bool:
        if not isinstance(other, AbsValue):
            return NotImplemented
        return self.p == other.p and self.k == other.k

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    def __lt__(self, other) -> bool:
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        if other.k is None:
            return False
        if self.k is None:
            return True
        return self.k < other.k

    def __mul__(self, other: AbsValue) -> AbsValue:
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        if self.k is None or other.k is None:
            return AbsValue(self.p, None)
        return AbsValue(self.p, self.k + other.k)

    def to_json(self) -> str:
        return "0" if self.k is None else str(self.value)

    def __str__(self) -> str:
        return "0" if self.k is None else f"{self.p}^{self.k}"

    def __repr__(self) -> str:
        return "AbsValue.zero(%d)" % self.p if self.k is None else f"AbsValue.ppow({self.p}, {self.k})"


def vp_int(ctx, n: int) -> Valuation:
    """Exponent of p in the integer n; INF for n = 0."""
    p = _ctx(ctx).p
    n = int(n)
    if n == 0:
        return INF
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def vp_rat(ctx, x) -> Valuation:
    """V_p(t/s) = V_p(t) - V_p(s); INF for zero."""
    if type(x) is int:
        return vp_int(ctx, x)
    x = rational(x)
    if x == 0:
        return INF
    return vp_int(ctx, x.numerator) - vp_int(ctx, x.denominator)


def abs_p(ctx, x) -> AbsValue:
    """|x|_p = p**(-V_p(x)), and 0 at x = 0."""
    ctx = _ctx(ctx)
    v = vp_rat(ctx, x)
    return AbsValue(ctx.p, None if v is INF else -v)


def dist_p(ctx, x, y) -> AbsValue:
    return abs_p(ctx, rational(x) - rational(y))


# -- function field Q(x) ------------------------------------------------------


def vfunc_px(rf: RationalFunction, p: Poly) -> Valuation:
    """Order of the monic (assumed irreducible) polynomial p in rf."""
    if p.degree < 1 or not p.is_monic():
        raise ValueError("place polynomial must be monic of degree >= 1")
    if rf.is_zero():
        return INF
    return factor_multiplicity(rf.num, p) - factor_multiplicity(rf.den, p)


def vfunc_inf(rf: RationalFunction) -> Valuation:
    """Valuation at infinity: deg(den) - deg(num)."""
    if rf.is_zero():
        return INF
    return rf.den.degree - rf.num.degree


@dataclass(frozen=True)
class FinitePlace:
    p: Poly

    def __str__(self) -> str:
        return str(self.p)


@dataclass(frozen=True)
class InfinitePlace:
    def __str__(self) -> str:
        return "inf"


@dataclass(frozen=True)
class MembershipReport:
    valuation: Valuation
    in_ring: bool
    in_maximal_ideal: bool

    def to_json(self) -> dict:
        return {
            "valuation": valuation_to_json(self.valuation),
            "in_ring": self.in_ring,
            "in_maximal_ideal": self.in_maximal_ideal,
        }


def ring_membership(rf: RationalFunction, place: FinitePlace | InfinitePlace) -> MembershipReport:
    """Membership of rf in the valuation ring O and its maximal ideal P."""
    if isinstance(place, FinitePlace):
        v = vfunc_px(rf, place.p)
    elif isinstance(place, InfinitePlace):
        v = vfunc_inf(rf)
    else:
        raise TypeError(f"unknown place {place!r}")
    return MembershipReport(v, v >= 0, v > 0)


def valuation_to_json(v: Valuation):
    return "inf" if v is INF else v
