"""Diagonal operators D(u) = sum lambda_i u_i e_i described by eigenvalue profiles.

A profile describes the whole (possibly infinite) diagonal symbolically:

* :class:`ExplicitProfile` -- finitely many values, each with a finite or
  infinite multiplicity.
* :class:`GeometricFamily` -- lambda_i = c * alpha**i with |alpha|_p < 1,
  so the values are pairwise distinct and accumulate only at 0.
* :class:`UnionProfile` -- a disjoint union of index sets, plus declared
  accumulation points that the library cannot derive on its own.

Infinite index sets are never enumerated. Operations that need actual
coordinates take an explicit truncation ``t``.

The essential spectrum is the set of lambda for which lambda*I - D is not
Fredholm of index 0. For a diagonal operator that happens exactly at
infinite-multiplicity eigenvalues and at accumulation points of the
eigenvalues that are not eigenvalues themselves.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Callable, Iterable, Iterator, Union

from .linalg import nullspace, rref
from .numeric import rational
from .valuations import INF, Infinity, _ctx, vp_rat
from .vectors import basis_vector, coord_complement, coord_span_contains, inner_omega

__all__ = [
    "Multiplicity",
    "ExplicitProfile",
    "GeometricFamily",
    "UnionProfile",
    "Profile",
    "ValueSet",
    "FredholmStatus",
    "SpectrumReport",
    "multiplicity",
    "cokernel_dim",
    "fredholm_status",
    "accumulation_points",
    "closure_points",
    "spectrum_report",
    "finite_rank_diag_report",
    "diagonal_prefix",
    "kernel_range_indices",
    "range_equals_kernel_perp",
    "cantor_pair",
    "cantor_unpair",
    "phi2_diagonal",
    "phi2_profile",
    "profile_from_json",
    "profile_to_json",
]

Multiplicity = Union[int, Infinity]

ACCUMULATION_PRECISION = 8


def _mult(m) -> Multiplicity:
    if m is INF or m == "inf":
        return INF
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ValueError(f"multiplicity must be a positive integer or INF, got {m!r}")
    return m


def _madd(a: Multiplicity, b: Multiplicity) -> Multiplicity:
    return INF if a is INF or b is INF else a + b


@dataclass(frozen=True)
class ExplicitProfile:
    entries: tuple[tuple[Fraction, Multiplicity], ...]

    def __post_init__(self):
        ents = tuple((rational(v), _mult(m)) for v, m in self.entries)
        values = [v for v, _ in ents]
        if len(set(values)) != len(values):
            raise ValueError("explicit profile values must be pairwise distinct")
        object.__setattr__(self, "entries", ents)

    @property
    def dimension(self) -> Multiplicity:
        total: Multiplicity = 0
        for _, m in self.entries:
            total = _madd(total, m)
        return total


@dataclass(frozen=True)
class GeometricFamily:
    p: int
    c: Fraction
    alpha: Fraction
    count_hint: int = 20

    def __post_init__(self):
        ctx = _ctx(self.p)
        c, a = rational(self.c), rational(self.alpha)
        if c == 0:
            raise ValueError("geometric family needs c != 0")
        if a == 0 or vp_rat(ctx, a) < 1:
            raise ValueError("geometric family needs 0 < |alpha|_p < 1")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "alpha", a)

    def term(self, i: int) -> Fraction:
        return self.c * self.alpha**i


@dataclass(frozen=True)
class UnionProfile:
    parts: tuple
    accumulation: tuple[Fraction, ...] = ()
    p: int | None = None

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("union profile needs at least one part")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "accumulation", tuple(rational(a) for a in self.accumulation))
        primes = {q for q in (_prime_of(x) for x in parts) if q is not None}
        if self.p is not None:
            primes.add(_ctx(self.p).p)
        if len(primes) > 1:
            raise ValueError(f"union mixes primes {sorted(primes)}")
        if self.accumulation and not primes:
            raise ValueError("declared accumulation points need a prime to be validated")
        object.__setattr__(self, "p", primes.pop() if primes else None)
        for a in self.accumulation:
            if multiplicity(self, a) != 0:
                raise ValueError(f"declared accumulation point {a} is an eigenvalue")


Profile = Union[ExplicitProfile, GeometricFamily, UnionProfile]


def _prime_of(profile: Profile) -> int | None:
    if isinstance(profile, GeometricFamily):
        return profile.p
    if isinstance(profile, UnionProfile):
        return profile.p
    return None


# -- kernel and cokernel ---------------------------------------------------------


def multiplicity(profile: Profile, lam) -> Multiplicity:
    """eta(lam*I - D): number of indices i with lambda_i = lam (0, n or INF)."""
    lam = rational(lam)
    if isinstance(profile, ExplicitProfile):
        for v, m in profile.entries:
            if v == lam:
                return m
        return 0
    if isinstance(profile, GeometricFamily):
        if lam == 0:
            return 0
        r = lam / profile.c
        vr, va = vp_rat(profile.p, r), vp_rat(profile.p, profile.alpha)
        if vr < 0 or vr % va:
            return 0
        return 1 if profile.alpha ** (vr // va) == r else 0
    if isinstance(profile, UnionProfile):
        total: Multiplicity = 0
        for part in profile.parts:
            total = _madd(total, multiplicity(part, lam))
        return total
    raise TypeError(f"unknown profile {profile!r}")


def cokernel_dim(profile: Profile, lam) -> Multiplicity:
    """delta(lam*I - D), counted as the basis vectors e_k missing from the image.

    The image is spanned by the e_k with lambda_k != lam; this walks the
    index structure directly instead of solving for the index as
    :func:`multiplicity` does.
    """
    lam = rational(lam)
    if isinstance(profile, ExplicitProfile):
        missing: Multiplicity = 0
        for v, m in profile.entries:
            if not (v != lam):
                missing = _madd(missing, m)
        return missing
    if isinstance(profile, GeometricFamily):
        if lam == 0:
            return 0
        # |c alpha^i| strictly decreases; past v(lam) no index can hit lam
        vc, va, vl = vp_rat(profile.p, profile.c), vp_rat(profile.p, profile.alpha), vp_rat(profile.p, lam)
        if vl < vc:
            return 0
        count = 0
        for i in range((vl - vc) // va + 1):
            if not (profile.term(i) != lam):
                count += 1
        return count
    if isinstance(profile, UnionProfile):
        missing = 0
        for part in profile.parts:
            missing = _madd(missing, cokernel_dim(part, lam))
        return missing
    raise TypeError(f"unknown profile {profile!r}")


# -- value sets -------------------------------------------------------------------


@dataclass(frozen=True)
class ValueSet:
    """A finite set of rationals plus geometric families, compared structurally."""

    points: frozenset = frozenset()
    families: tuple[GeometricFamily, ...] = ()

    def __post_init__(self):
        fams = tuple(sorted(set(self.families), key=lambda f: (f.p, f.c, f.alpha)))
        pts = frozenset(x for x in self.points if not any(multiplicity(f, x) for f in fams))
        object.__setattr__(self, "families", fams)
        object.__setattr__(self, "points", pts)

    def __contains__(self, x) -> bool:
        x = rational(x)
        return x in self.points or any(multiplicity(f, x) for f in self.families)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ValueSet):
            return NotImplemented
        fam = lambda s: {(f.p, f.c, f.alpha) for f in s.families}  # noqa: E731
        return self.points == other.points and fam(self) == fam(other)

    def __hash__(self) -> int:
        return hash((self.points, tuple((f.p, f.c, f.alpha) for f in self.families)))

    def is_finite(self) -> bool:
        return not self.families

    def union(self, other: ValueSet) -> ValueSet:
        return ValueSet(self.points | other.points, self.families + other.families)

    def sample(self, n: int) -> list[Fraction]:
        out = sorted(self.points)
        for f in self.families:
            out.extend(f.term(i) for i in range(n))
        return out

    def to_json(self) -> dict:
        return {
            "points": [str(x) for x in sorted(self.points)],
            "families": [{"p": f.p, "c": str(f.c), "alpha": str(f.alpha)} for f in self.families],
        }


def _eigen_values(profile: Profile) -> ValueSet:
    if isinstance(profile, ExplicitProfile):
        return ValueSet(frozenset(v for v, _ in profile.entries))
    if isinstance(profile, GeometricFamily):
        return ValueSet(frozenset(), (profile,))
    out = ValueSet()
    for part in profile.parts:
        out = out.union(_eigen_values(part))
    return out


def _sample_values(profile: Profile) -> list[Fraction]:
    if isinstance(profile, ExplicitProfile):
        return [v for v, _ in profile.entries]
    if isinstance(profile, GeometricFamily):
        return [profile.term(i) for i in range(profile.count_hint)]
    return [v for part in profile.parts for v in _sample_values(part)]


def accumulation_points(profile: Profile) -> tuple[frozenset, list[str]]:
    """Accumulation points of the eigenvalue family, with validation warnings."""
    warnings: list[str] = []
    if isinstance(profile, ExplicitProfile):
        return frozenset(), warnings
    if isinstance(profile, GeometricFamily):
        return frozenset({Fraction(0)}), warnings
    pts: set = set()
    for part in profile.parts:
        sub, w = accumulation_points(part)
        pts |= sub
        warnings.extend(w)
    samples = _sample_values(profile)
    for a in profile.accumulation:
        near = any(
            v != a and vp_rat(profile.p, v - a) >= ACCUMULATION_PRECISION for v in samples
        )
        if not near:
            warnings.append(
                f"declared accumulation point {a} is not approached within "
                f"{profile.p}^-{ACCUMULATION_PRECISION} by the sampled eigenvalues"
            )
        pts.add(a)
    return frozenset(pts), warnings


def closure_points(profile: Profile) -> ValueSet:
    """Closure of the eigenvalue family: the eigenvalues plus accumulation points."""
    acc, _ = accumulation_points(profile)
    return _eigen_values(profile).union(ValueSet(acc))


# -- Fredholm classification -------------------------------------------------------


@dataclass(frozen=True)
class FredholmStatus:
    """Kernel/cokernel dimensions of lam*I - D and its classification.

    ``kind`` is one of ``"resolvent"`` (invertible), ``"eigenvalue"``
    (finite multiplicity, Fredholm of index 0), ``"boundary"`` (injective,
    not surjective, range not closed) or ``"infinite-multiplicity"``.
    """

    eta: Multiplicity
    delta: Multiplicity
    kind: str

    @property
    def index_zero(self) -> bool:
        return self.kind in ("resolvent", "eigenvalue")

    @property
    def index(self) -> int | None:
        if not self.index_zero:
            return None
        return self.eta - self.delta

    def to_json(self) -> dict:
        j = lambda m: "inf" if m is INF else m  # noqa: E731
        return {
            "eta": j(self.eta),
            "delta": j(self.delta),
            "kind": self.kind,
            "fredholm_index_zero": self.index_zero,
        }


def fredholm_status(profile: Profile, lam) -> FredholmStatus:
    lam = rational(lam)
    eta, delta = multiplicity(profile, lam), cokernel_dim(profile, lam)
    if eta is INF:
        kind = "infinite-multiplicity"
    elif eta:
        kind = "eigenvalue"
    else:
        acc, _ = accumulation_points(profile)
        kind = "boundary" if lam in acc else "resolvent"
    return FredholmStatus(eta, delta, kind)


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise AssertionError(message)


@dataclass(frozen=True)
class SpectrumReport:
    point_spectrum: ValueSet
    sigma_e_prime: frozenset
    sigma_e_double_prime: frozenset
    sigma_e: frozenset
    sigma: ValueSet
    statuses: dict = field(default_factory=dict)
    warnings: tuple[str, ...] = ()

    def to_json(self) -> dict:
        pts = lambda s: [str(x) for x in sorted(s)]  # noqa: E731
        return {
            "sigma_p": self.point_spectrum.to_json(),
            "sigma_e_prime": pts(self.sigma_e_prime),
            "sigma_e_double_prime": pts(self.sigma_e_double_prime),
            "sigma_e": pts(self.sigma_e),
            "sigma": self.sigma.to_json(),
            "statuses": {str(k): v.to_json() for k, v in sorted(self.statuses.items())},
            "warnings": list(self.warnings),
        }


def _explicit_values(profile: Profile) -> set:
    if isinstance(profile, ExplicitProfile):
        return {v for v, _ in profile.entries}
    if isinstance(profile, UnionProfile):
        return set().union(*(_explicit_values(p) for p in profile.parts))
    return set()


def spectrum_report(profile: Profile, probes: Iterable = ()) -> SpectrumReport:
    """Point, essential and full spectrum of D, with the decomposition checked.

    The essential spectrum is computed operationally, as the candidates whose
    status is not Fredholm of index 0; the proper and improper parts are then
    checked against it. Candidates are the explicitly listed eigenvalues and
    the accumulation points: eigenvalues inside a geometric family always
    have multiplicity 1 there and so cannot be essential unless they are
    also explicit or accumulation values.
    """
    acc, warnings = accumulation_points(profile)
    eigen = _eigen_values(profile)
    closure = eigen.union(ValueSet(acc))
    probes = [rational(x) for x in probes]
    candidates = sorted(_explicit_values(profile) | set(acc))
    statuses = {lam: fredholm_status(profile, lam) for lam in sorted(set(candidates) | set(probes))}

    for lam, st in statuses.items():
        _check(st.eta == st.delta, f"kernel and cokernel dimensions differ at {lam}")

    sigma_e = frozenset(lam for lam in candidates if not statuses[lam].index_zero)
    # injective but not surjective: multiplicity 0 inside the closure
    proper = frozenset(
        lam for lam in candidates if statuses[lam].eta == 0 and lam in closure
    )
    improper = frozenset(lam for lam in candidates if statuses[lam].eta is INF)
    boundary = frozenset(a for a in acc if a not in eigen)

    _check(sigma_e == proper | improper, "essential spectrum is not the union of its parts")
    _check(not (proper & improper), "proper and improper essential spectra overlap")
    _check(proper == boundary, "proper essential spectrum differs from the boundary of the eigenvalues")
    _check(all(lam in eigen for lam in improper), "improper essential spectrum leaves the point spectrum")
    for lam in probes:
        _check(statuses[lam].index_zero == (lam not in sigma_e), f"probe {lam} disagrees with the essential spectrum")

    return SpectrumReport(eigen, proper, improper, sigma_e, closure, statuses, tuple(warnings))


def finite_rank_diag_report(profile: ExplicitProfile, probes: Iterable = ()) -> SpectrumReport:
    """Spectrum of a finite-rank diagonal operator: 0 of infinite multiplicity
    plus finitely many nonzero eigenvalues of finite multiplicity."""
    ok = (
        isinstance(profile, ExplicitProfile)
        and any(v == 0 and m is INF for v, m in profile.entries)
        and all(m is not INF for v, m in profile.entries if v != 0)
    )
    if not ok:
        raise ValueError("not a finite-rank diagonal profile")
    rep = spectrum_report(profile, probes)
    _check(rep.sigma.is_finite() and rep.sigma == rep.point_spectrum, "spectrum is not the finite point spectrum")
    _check(rep.sigma_e == frozenset({Fraction(0)}), "essential spectrum is not {0}")
    for v, _ in profile.entries:
        if v != 0:
            _check(rep.statuses[v].index_zero, f"nonzero eigenvalue {v} is not Fredholm of index 0")
    return rep


# -- truncations -------------------------------------------------------------------


def _iter_diagonal(profile: Profile) -> Iterator[Fraction]:
    if isinstance(profile, ExplicitProfile):
        for v, m in profile.entries:
            if m is not INF:
                yield from itertools.repeat(v, m)
        infinite = [v for v, m in profile.entries if m is INF]
        if infinite:
            yield from itertools.cycle(infinite)
    elif isinstance(profile, GeometricFamily):
        term = profile.c
        while True:
            yield term
            term *= profile.alpha
    elif isinstance(profile, UnionProfile):
        # round-robin over the parts, dropping exhausted ones
        live = [_iter_diagonal(p) for p in profile.parts]
        while live:
            nxt = []
            for it in live:
                try:
                    yield next(it)
                except StopIteration:
                    continue
                nxt.append(it)
            live = nxt
    else:
        raise TypeError(f"unknown profile {profile!r}")


def diagonal_prefix(profile: Profile, t: int) -> list[Fraction]:
    """lambda_0 .. lambda_{t-1}; shorter if the profile is finite-dimensional."""
    return list(itertools.islice(_iter_diagonal(profile), t))


def kernel_range_indices(profile: Profile, lam, t: int) -> tuple[frozenset, frozenset]:
    lam = rational(lam)
    diag = diagonal_prefix(profile, t)
    kernel = frozenset(i for i, v in enumerate(diag) if v == lam)
    rng = frozenset(k for k, v in enumerate(diag) if v != lam)
    return kernel, rng


def range_equals_kernel_perp(profile: Profile, lam, t: int, omega=None) -> bool:
    """Check R(lam*I - D) = N(lam*I - D)^perp on the first t coordinates.

    The range is read off the columns of the truncated operator, the
    orthogonal complement is solved for with the weighted form, and both
    are compared with the coordinate complement of the kernel indices.
    """
    lam = rational(lam)
    diag = diagonal_prefix(profile, t)
    n = len(diag)
    w = [Fraction(1)] * n if omega is None else [rational(x) for x in omega][:n]
    if len(w) != n or any(x == 0 for x in w):
        return False
    kernel, rng = kernel_range_indices(profile, lam, n)
    if rng != coord_complement(kernel, n):
        return False

    # range: row space of the transposed diagonal operator
    cols = [tuple((lam - diag[k]) * e for e in basis_vector(k, n)) for k in range(n)]
    _, pivots = rref(cols)
    if frozenset(pivots) != rng:
        return False

    # orthogonal complement of span{e_i : i in kernel} under the weighted form
    functionals = [
        tuple(inner_omega(w, basis_vector(i, n), basis_vector(r, n)) for r in range(n))
        for i in sorted(kernel)
    ]
    perp = nullspace(functionals, n)
    if len(perp) != len(rng) or not all(coord_span_contains(rng, v) for v in perp):
        return False
    return all(inner_omega(w, basis_vector(i, n), v) == 0 for i in kernel for v in perp)


# -- the phi_2 construction ------------------------------------------------------------


def cantor_pair(n: int, k: int) -> int:
    return (n + k) * (n + k + 1) // 2 + k


def cantor_unpair(i: int) -> tuple[int, int]:
    """Inverse of :func:`cantor_pair`, a bijection N -> N x N."""
    s = (isqrt(8 * i + 1) - 1) // 2
    k = i - s * (s + 1) // 2
    return s - k, k


def phi2_diagonal(alpha: Callable[[int], Fraction], t: int) -> list[Fraction]:
    """lambda_i = alpha(n) where (n, k) = phi_2(i): each alpha(n) is hit for every k."""
    return [rational(alpha(cantor_unpair(i)[0])) for i in range(t)]


def phi2_profile(alphas: Iterable, p: int | None = None, accumulation: Iterable = ()) -> UnionProfile:
    """Profile of the phi_2 diagonal restricted to finitely many distinct alpha_n.

    Every alpha_n sits on infinitely many indices, so it is an eigenvalue of
    infinite multiplicity.
    """
    alphas = [rational(a) for a in alphas]
    if p is not None and any(a == 0 or vp_rat(p, a) < 1 for a in alphas):
        raise ValueError("alpha_n must be nonzero with |alpha_n|_p < 1")
    return UnionProfile((ExplicitProfile(tuple((a, INF) for a in alphas)),), tuple(accumulation), p)


# -- JSON ------------------------------------------------------------------------------


def profile_from_json(obj: dict) -> Profile:
    kind = obj.get("kind")
    if kind == "explicit":
        return ExplicitProfile(
            tuple((rational(str(e["value"])), _mult(e["mult"])) for e in obj["entries"])
        )
    if kind == "geometric":
        return GeometricFamily(
            int(obj["p"]), rational(str(obj["c"])), rational(str(obj["alpha"])),
            int(obj.get("count_hint", 20)),
        )
    if kind == "union":
        return UnionProfile(
            tuple(profile_from_json(x) for x in obj["parts"]),
            tuple(rational(str(a)) for a in obj.get("accumulation", ())),
            obj.get("p"),
        )
    raise ValueError(f"unknown profile kind {kind!r}")


def profile_to_json(profile: Profile) -> dict:
    if isinstance(profile, ExplicitProfile):
        return {
            "kind": "explicit",
            "entries": [
                {"value": str(v), "mult": "inf" if m is INF else m} for v, m in profile.entries
            ],
        }
    if isinstance(profile, GeometricFamily):
        return {
            "kind": "geometric", "p": profile.p, "c": str(profile.c),
            "alpha": str(profile.alpha), "count_hint": profile.count_hint,
        }
    out = {
        "kind": "union",
        "parts": [profile_to_json(x) for x in profile.parts],
        "accumulation": [str(a) for a in profile.accumulation],
    }
    if profile.p is not None:
        out["p"] = profile.p
    return out
