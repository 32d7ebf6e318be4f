"""Exact rationals, dense univariate polynomials over Q, and rational functions.

Rationals are :class:`fractions.Fraction`; this module adds the canonical
constructor used throughout the package plus a small polynomial layer.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

__all__ = [
    "Fraction",
    "rational",
    "rational_normalize",
    "parse_rational",
    "format_rational",
    "Poly",
    "poly_divmod",
    "poly_gcd",
    "factor_multiplicity",
    "RationalFunction",
]

_RATIONAL_RE = re.compile(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def rational_normalize(n: int, d: int) -> Fraction:
    """Return n/d in lowest terms with a positive denominator."""
    if d == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(n, d)


def parse_rational(text: str) -> Fraction:
    """Parse ``-?digits(/digits)?``. Accepts the unicode minus sign."""
    src = text.replace("−", "-")
    m = _RATIONAL_RE.match(src)
    if m is None:
        # report the first offending character
        pos = 0
        stripped = src.lstrip()
        pos = len(src) - len(stripped)
        ok = re.match(r"-?\d*(/\d*)?", stripped)
        pos += ok.end() if ok else 0
        raise ValueError(f"malformed rational {text!r} at position {pos}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r} at position {src.index('/') + 1}")
    return Fraction(int(num), int(den) if den is not None else 1)


def rational(x) -> Fraction:
    """Coerce int, Fraction or rational text to Fraction. Floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    if hasattr(x, "numerator") and hasattr(x, "denominator") and not isinstance(x, float):
        return Fraction(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rational(x: Fraction) -> str:
    return str(x)


class Poly:
    """Dense polynomial over Q, coefficients stored lowest degree first.

    The coefficient tuple never ends in zero; the zero polynomial is ``()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> Poly:
        out = cls([lead])
        for r in roots:
            out = out * cls([-rational(r), 1])
        return out

    @classmethod
    def parse(cls, text: str) -> Poly:
        """Parse ``"[-1, 0, 1]"`` (lowest degree first) or an expression like ``"x^2 - 1"``."""
        src = text.strip().replace("−", "-")
        if not src.startswith("["):
            return _parse_poly_expr(src)
        if not src.endswith("]"):
            raise ValueError(f"unterminated coefficient list: {text!r}")
        body = src[1:-1].strip()
        if not body:
            return cls()
        return cls(parse_rational(part) for part in body.split(","))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> Poly:
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic associate")
        lc = self.coeffs[-1]
        return Poly(c / lc for c in self.coeffs)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> Poly:
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> Poly:
        return _as_poly(other) - self

    def __mul__(self, other) -> Poly:
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative polynomial power")
        out, base = Poly([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        return poly_divmod(self, _as_poly(other))

    def __floordiv__(self, other) -> Poly:
        return poly_divmod(self, _as_poly(other))[0]

    def __mod__(self, other) -> Poly:
        return poly_divmod(self, _as_poly(other))[1]

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = f"({c})" if c.denominator != 1 else str(c)
                if mono:
                    coef += "*"
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ")


_TERM_RE = re.compile(r"([+-]?)(\d+(?:/\d+)?)?\*?(x(?:\^(\d+))?)?")


def _parse_poly_expr(src: str) -> Poly:
    s = src.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"malformed polynomial {src!r} at position {pos}")
        if pos > 0 and not m.group(1):
            raise ValueError(f"missing operator in {src!r} at position {pos}")
        c = parse_rational(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            c = -c
        deg = 0
        if m.group(3):
            deg = int(m.group(4)) if m.group(4) else 1
        coeffs[deg] = coeffs.get(deg, Fraction(0)) + c
        pos = m.end()
    top = max(coeffs)
    return Poly(coeffs.get(i, 0) for i in range(top + 1))


def _as_poly(x) -> Poly:
    return x if isinstance(x, Poly) else Poly([x])


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division: ``a = q*b + r`` with ``deg r < deg b``."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a.coeffs)
    db = b.degree
    if len(r) - 1 < db:
        return Poly(), Poly(r)
    inv_lead = 1 / b.lead
    q = [Fraction(0)] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv_lead
        q[k] = c
        if c:
            for j, bj in enumerate(b.coeffs):
                r[k + j] -= c * bj
    return Poly(q), Poly(r[:db])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic() if not a.is_zero() else a


def factor_multiplicity(f: Poly, p: Poly) -> int:
    """Largest m with p**m dividing f, by repeated exact division.

    ``p`` should be irreducible; that is not checked. For reducible ``p``
    the count is still the exact power of ``p`` dividing ``f``, but the
    resulting function-field "valuation" need not satisfy the valuation
    axioms.
    """
    if f.is_zero():
        raise ValueError("multiplicity undefined for zero")
    if p.degree < 1:
        raise ValueError("divisor must have degree >= 1")
    if not p.is_monic():
        raise ValueError("divisor must be monic")
    m = 0
    while f.degree >= p.degree:
        q, r = poly_divmod(f, p)
        if not r.is_zero():
            break
        f, m = q, m + 1
    return m


class RationalFunction:
    """f/g in Q(x), stored with gcd(f, g) = 1 and g monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num) if not isinstance(num, Poly) else num
        den = Poly([1]) if den is None else (_as_poly(den) if not isinstance(den, Poly) else den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly([1])
            return
        g = poly_gcd(num, den)
        num, den = num // g, den // g
        lc = den.lead
        self.num = Poly(c / lc for c in num.coeffs)
        self.den = Poly(c / lc for c in den.coeffs)

    @classmethod
    def parse(cls, text: str) -> RationalFunction:
        """``"[num coeffs]/[den coeffs]"`` or a single coefficient list."""
        src = text.strip()
        if "]/[" in src.replace(" ", ""):
            head, _, tail = src.partition("]")
            rest = tail.strip()
            if not rest.startswith("/"):
                raise ValueError(f"malformed rational function {text!r}")
            return cls(Poly.parse(head + "]"), Poly.parse(rest[1:]))
        return cls(Poly.parse(src))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: RationalFunction) -> RationalFunction:
        return self + (-other)

    def __mul__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: RationalFunction) -> RationalFunction:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den == Poly([1]):
            return str(self.num)
        return f"({self.num})/({self.den})"

