"""Balls, spheres and triangles in (Q, |.|_p).

Radii live in the value group, so an open ball of radius p**k is the same
set as the closed ball of radius p**(k-1). All decisions below reduce to
that normal form and one exact distance comparison.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .numeric import rational
from .valuations import AbsValue, PAdicContext, _ctx, dist_p

__all__ = [
    "Ball",
    "Relation",
    "TriangleReport",
    "ball_contains",
    "recenter_equivalent",
    "balls_relation",
    "isosceles_witness",
    "sphere_contains",
]


class Relation(str, enum.Enum):
    DISJOINT = "Disjoint"
    LEFT_INSIDE_RIGHT = "LeftInsideRight"
    RIGHT_INSIDE_LEFT = "RightInsideLeft"
    EQUAL = "Equal"


@dataclass(frozen=True)
class Ball:
    center: Fraction
    radius: AbsValue
    kind: str = "closed"

    def __post_init__(self):
        object.__setattr__(self, "center", rational(self.center))
        if self.kind not in ("open", "closed"):
            raise ValueError(f"ball kind must be 'open' or 'closed', got {self.kind!r}")
        if self.radius.is_zero():
            raise ValueError("ball radius must be nonzero")

    @classmethod
    def of(cls, p: int, center, radius, kind: str = "closed") -> Ball:
        """Build from a rational radius, which must be a power of p."""
        return cls(rational(center), AbsValue.from_rational(p, radius), kind)

    @property
    def p(self) -> int:
        return self.radius.p

    @property
    def closed_exponent(self) -> int:
        """k such that this ball equals the closed ball of radius p**k."""
        return self.radius.k if self.kind == "closed" else self.radius.k - 1

    def recentered(self, y) -> Ball:
        return Ball(rational(y), self.radius, self.kind)

    def __str__(self) -> str:
        bracket = "B̄" if self.kind == "closed" else "B"
        return f"{bracket}({self.center}, {self.radius.value})"


def _same_prime(ctx: PAdicContext, *balls: Ball) -> None:
    for b in balls:
        if b.p != ctx.p:
            raise ValueError(f"ball radius is a power of {b.p}, context prime is {ctx.p}")


def ball_contains(ctx, b: Ball, y) -> bool:
    ctx = _ctx(ctx)
    _same_prime(ctx, b)
    d = dist_p(ctx, b.center, y)
    return d < b.radius if b.kind == "open" else d <= b.radius


def recenter_equivalent(ctx, b: Ball, y) -> bool:
    """True iff y lies in b, in which case b recentered at y is the same set."""
    return ball_contains(ctx, b, y)


def balls_relation(ctx, a: Ball, b: Ball) -> Relation:
    ctx = _ctx(ctx)
    _same_prime(ctx, a, b)
    ka, kb = a.closed_exponent, b.closed_exponent
    bound = AbsValue(ctx.p, max(ka, kb))
    if dist_p(ctx, a.center, b.center) > bound:
        return Relation.DISJOINT
    if ka == kb:
        return Relation.EQUAL
    return Relation.LEFT_INSIDE_RIGHT if ka < kb else Relation.RIGHT_INSIDE_LEFT


@dataclass(frozen=True)
class TriangleReport:
    """Pairwise distances of a triangle, keyed ``"xy"``, ``"yz"``, ``"xz"``."""

    sides: dict
    equal_pair: tuple[str, str]
    third: str
    equilateral: bool

    def to_json(self) -> dict:
        return {
            "sides": {k: v.to_json() for k, v in self.sides.items()},
            "equal_pair": list(self.equal_pair),
            "third": self.third,
            "equilateral": self.equilateral,
        }


def isosceles_witness(ctx, x, y, z) -> TriangleReport:
    ctx = _ctx(ctx)
    x, y, z = rational(x), rational(y), rational(z)
    if x == y or y == z or x == z:
        raise ValueError("not a triangle")
    sides = {"xy": dist_p(ctx, x, y), "yz": dist_p(ctx, y, z), "xz": dist_p(ctx, x, z)}
    names = list(sides)
    for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        a, b, c = names[i], names[j], names[k]
        if sides[a] == sides[b] and sides[c] <= sides[a]:
            return TriangleReport(sides, (a, b), c, sides[c] == sides[a])
    # unreachable in an ultrametric space
    raise ArithmeticError(f"triangle {x}, {y}, {z} is not isosceles for p={ctx.p}")


def sphere_contains(ctx, center, r: AbsValue, y) -> bool:
    if r.is_zero():
        raise ValueError("sphere radius must be nonzero")
    return dist_p(ctx, center, y) == r
