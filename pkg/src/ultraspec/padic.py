"""Finite-precision p-adic expansions and certified series/Cauchy checks.

An approximation is known modulo ``p**N`` (absolute precision ``N``) and
stored as canonical digits in ``[0, p)`` starting at ``p**shift``. A finite
prefix of a sequence never proves a limit; certification always rests on a
declared tail bound supplied by the caller.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .numeric import rational
from .valuations import INF, PAdicContext, Valuation, _ctx, vp_rat

__all__ = [
    "PAdicApprox",
    "SequenceOracle",
    "CauchyReport",
    "ConvergenceError",
    "approx_from_rational",
    "approx_add",
    "approx_mul",
    "approx_neg",
    "approx_equal",
    "cauchy_check",
    "sum_series",
    "equivalent_at",
]


class ConvergenceError(ArithmeticError):
    pass


@dataclass(frozen=True)
class PAdicApprox:
    ctx: PAdicContext
    shift: int
    digits: tuple[int, ...]

    def __post_init__(self):
        p = self.ctx.p
        if any(not 0 <= d < p for d in self.digits):
            raise ValueError(f"digits must lie in [0, {p})")

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def precision(self) -> int:
        return self.shift + len(self.digits)

    def representative(self) -> Fraction:
        """The rational sum of the known digits."""
        p = self.ctx.p
        acc = 0
        for d in reversed(self.digits):
            acc = acc * p + d
        return Fraction(acc) * Fraction(p) ** self.shift

    def valuation(self) -> Valuation:
        """Valuation if resolved at this precision, else INF (meaning >= precision)."""
        for i, d in enumerate(self.digits):
            if d:
                return self.shift + i
        return INF

    def to_json(self) -> dict:
        return {"shift": self.shift, "digits": list(self.digits)}

    def __str__(self) -> str:
        p = self.ctx.p
        terms = [f"{d}*{p}^{self.shift + i}" for i, d in enumerate(self.digits) if d]
        return (" + ".join(terms) or "0") + f" + O({p}^{self.precision})"


def approx_from_rational(ctx, x, N: int) -> PAdicApprox:
    """Expansion of x known modulo p**N.

    The digit window starts at ``min(0, V_p(x))`` so p-integral inputs get
    ``shift = 0`` and leading zeros.
    """
    ctx = _ctx(ctx)
    p = ctx.p
    x = rational(x)
    v = vp_rat(ctx, x)
    shift = 0 if v is INF else min(0, v)
    shift = min(shift, N)
    length = N - shift
    if length == 0:
        return PAdicApprox(ctx, shift, ())
    # y = x * p**(-shift) is p-integral
    y = x * Fraction(p) ** (-shift)
    mod = p**length
    residue = (y.numerator * pow(y.denominator, -1, mod)) % mod
    digits = []
    for _ in range(length):
        residue, d = divmod(residue, p)
        digits.append(d)
    return PAdicApprox(ctx, shift, tuple(digits))


def _same_ctx(a: PAdicApprox, b: PAdicApprox) -> PAdicContext:
    if a.ctx != b.ctx:
        raise ValueError(f"mixed primes {a.p} and {b.p}")
    return a.ctx


def approx_add(a: PAdicApprox, b: PAdicApprox) -> PAdicApprox:
    ctx = _same_ctx(a, b)
    n = min(a.precision, b.precision)
    return approx_from_rational(ctx, a.representative() + b.representative(), n)


def approx_neg(a: PAdicApprox) -> PAdicApprox:
    return approx_from_rational(a.ctx, -a.representative(), a.precision)


def approx_mul(a: PAdicApprox, b: PAdicApprox) -> PAdicApprox:
    """Product known to min(N_a + v_b, N_b + v_a), valuations capped at precision."""
    ctx = _same_ctx(a, b)
    va, vb = a.valuation(), b.valuation()
    va = a.precision if va is INF else va
    vb = b.precision if vb is INF else vb
    n = min(a.precision + vb, b.precision + va)
    return approx_from_rational(ctx, a.representative() * b.representative(), n)


def approx_equal(a: PAdicApprox, b: PAdicApprox) -> bool:
    """Equality modulo the smaller of the two precisions."""
    ctx = _same_ctx(a, b)
    n = min(a.precision, b.precision)
    return vp_rat(ctx, a.representative() - b.representative()) >= n


@dataclass(frozen=True)
class SequenceOracle:
    """A deterministic sequence of rationals with an optional tail guarantee.

    ``tail(n)`` promises ``V_p(increment(n)) >= tail(n)`` for every n, where
    the increment is ``term(n+1) - term(n)`` when the oracle is read as a
    sequence and ``term(n)`` itself when it is read as a series. ``tail``
    must be non-decreasing and unbounded (it may return INF).
    """

    ctx: PAdicContext
    term: Callable[[int], Fraction]
    tail: Optional[Callable[[int], Valuation]] = None
    name: str = field(default="", compare=False)

    def __call__(self, n: int) -> Fraction:
        return rational(self.term(n))


@dataclass(frozen=True)
class CauchyReport:
    verdict: str  # "cauchy-certified" | "prefix-consistent" | "prefix-refuted"
    diff_valuations: tuple
    violations: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "diff_valuations": ["inf" if v is INF else v for v in self.diff_valuations],
            "violations": list(self.violations),
        }


def cauchy_check(seq: SequenceOracle, prefix_len: int) -> CauchyReport:
    """Inspect V_p(x_{n+1} - x_n) over the first prefix_len terms.

    Without a declared tail the verdict can only be ``prefix-consistent``.
    """
    if prefix_len < 2:
        raise ValueError("prefix_len must be at least 2")
    xs = [seq(n) for n in range(prefix_len)]
    diffs = tuple(vp_rat(seq.ctx, xs[n + 1] - xs[n]) for n in range(prefix_len - 1))
    if seq.tail is None:
        return CauchyReport("prefix-consistent", diffs, ())
    bad = tuple(n for n, v in enumerate(diffs) if v < seq.tail(n))
    return CauchyReport("prefix-refuted" if bad else "cauchy-certified", diffs, bad)


def sum_series(seq: SequenceOracle, target_precision: int, max_terms: int) -> PAdicApprox:
    """Partial sum of sum_n term(n), correct modulo p**target_precision.

    Summation stops at the first index n0 with tail(n0) >= target_precision;
    every later term is then divisible by p**target_precision.
    """
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    if seq.tail is None:
        raise ConvergenceError("convergence not certified at this precision: no tail bound declared")
    total = Fraction(0)
    for n in range(max_terms + 1):
        if seq.tail(n) >= target_precision:
            return approx_from_rational(seq.ctx, total, target_precision)
        if n == max_terms:
            break
        t = seq(n)
        if vp_rat(seq.ctx, t) < seq.tail(n):
            raise ConvergenceError(f"declared tail bound violated at term {n}")
        total += t
    raise ConvergenceError("convergence not certified at this precision")


def equivalent_at(a: SequenceOracle, b: SequenceOracle, N: int, prefix_len: int, window: int = 4) -> bool:
    """Finite stand-in for the Cauchy-class relation.

    True when the last ``window`` differences of the prefixes all have
    valuation >= N.
    """
    if a.ctx != b.ctx:
        raise ValueError("mixed primes")
    start = max(0, prefix_len - window)
    return all(vp_rat(a.ctx, a(n) - b(n)) >= N for n in range(start, prefix_len))
