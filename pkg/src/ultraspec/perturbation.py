"""Finite-rank perturbations T = D + sum_k u_k (x) v_k, truncated to t coordinates.

Convention: ``(u (x) v)(x) = <x, v>_omega * u``, so the assembled matrix is

    T[i][j] = lambda_i [i == j] + sum_k u_k[i] * omega_j * v_k[j]

and its diagonal is ``theta_j = lambda_j + omega_j * sum_k u_k[j] v_k[j]``.
Eigenvalues are only ever searched among rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import Matrix, bareiss_rank, char_poly, nullspace, rational_roots
from .numeric import Poly, rational
from .vectors import Vec, basis_vector, inner_omega, vec, weights

__all__ = [
    "FiniteRankPerturbation",
    "TruncatedOperator",
    "EigenReport",
    "ComparisonReport",
    "rank_one_apply",
    "assemble",
    "apply",
    "theta_sequence",
    "is_eigenvalue",
    "char_poly_oracle",
    "spectrum_compare",
    "ORACLE_MAX_DIM",
]

ORACLE_MAX_DIM = 12


@dataclass(frozen=True)
class FiniteRankPerturbation:
    weights: Vec
    pairs: tuple[tuple[Vec, Vec], ...]

    def __post_init__(self):
        w = weights(self.weights)
        pairs = tuple((vec(u), vec(v)) for u, v in self.pairs)
        if not pairs:
            raise ValueError("a perturbation needs at least one (u, v) pair")
        t = len(w)
        for u, v in pairs:
            if len(u) != t or len(v) != t:
                raise ValueError(f"vector lengths {len(u)}, {len(v)} do not match {t} weights")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def rank_one(cls, omega, u, v) -> FiniteRankPerturbation:
        return cls(omega, ((u, v),))

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def rank_bound(self) -> int:
        return len(self.pairs)

    def permuted(self, perm: Sequence[int]) -> FiniteRankPerturbation:
        """Relabel coordinates: new index j is old index perm[j]."""
        pick = lambda x: tuple(x[i] for i in perm)  # noqa: E731
        return FiniteRankPerturbation(pick(self.weights), tuple((pick(u), pick(v)) for u, v in self.pairs))


@dataclass(frozen=True)
class TruncatedOperator:
    entries: Matrix
    lambdas: Vec
    pert: FiniteRankPerturbation | None = None

    @property
    def dim(self) -> int:
        return len(self.entries)

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries]


def rank_one_apply(w: Sequence, u: Sequence, v: Sequence, x: Sequence) -> Vec:
    """(u (x) v)(x) = <x, v>_omega u."""
    if not len(w) == len(u) == len(v) == len(x):
        raise ValueError("length mismatch")
    s = inner_omega(w, x, v)
    return tuple(s * rational(c) for c in u)


def _check_lambdas(lambda_prefix: Iterable, pert: FiniteRankPerturbation) -> Vec:
    lam = vec(lambda_prefix)
    if len(lam) != pert.dim:
        raise ValueError(f"{len(lam)} eigenvalues for a perturbation of dimension {pert.dim}")
    return lam


def assemble(lambda_prefix: Iterable, pert: FiniteRankPerturbation) -> TruncatedOperator:
    lam = _check_lambdas(lambda_prefix, pert)
    t, w = pert.dim, pert.weights
    rows = []
    for i in range(t):
        row = []
        for j in range(t):
            x = lam[i] if i == j else Fraction(0)
            for u, v in pert.pairs:
                x += u[i] * w[j] * v[j]
            row.append(x)
        rows.append(tuple(row))
    return TruncatedOperator(tuple(rows), lam, pert)


def apply(lambda_prefix: Iterable, pert: FiniteRankPerturbation, x: Sequence) -> Vec:
    """T x computed operator-wise: D x + sum_k (u_k (x) v_k)(x), no matrix."""
    lam = _check_lambdas(lambda_prefix, pert)
    x = vec(x)
    out = [a * b for a, b in zip(lam, x)]
    for u, v in pert.pairs:
        out = [a + b for a, b in zip(out, rank_one_apply(pert.weights, u, v, x))]
    return tuple(out)


def theta_sequence(lambda_prefix: Iterable, pert: FiniteRankPerturbation) -> Vec:
    """theta_j = lambda_j + omega_j sum_k u_k[j] v_k[j], checked against the matrix diagonal."""
    lam = _check_lambdas(lambda_prefix, pert)
    w = pert.weights
    theta = tuple(
        lam[j] + w[j] * sum((u[j] * v[j] for u, v in pert.pairs), Fraction(0)) for j in range(pert.dim)
    )
    diag = tuple(row[j] for j, row in enumerate(assemble(lam, pert).entries))
    if diag != theta:
        raise AssertionError("theta sequence differs from the assembled diagonal")
    return theta


@dataclass(frozen=True)
class EigenReport:
    lam: Fraction
    rank: int
    kernel_dim: int
    kernel_basis: tuple[Vec, ...]

    @property
    def is_eigenvalue(self) -> bool:
        return self.kernel_dim > 0

    def __bool__(self) -> bool:
        return self.is_eigenvalue

    def to_json(self) -> dict:
        return {
            "lambda": str(self.lam),
            "is_eigenvalue": self.is_eigenvalue,
            "rank": self.rank,
            "kernel_dim": self.kernel_dim,
            "kernel_basis": [[str(x) for x in b] for b in self.kernel_basis],
        }


def is_eigenvalue(T: TruncatedOperator, lam) -> EigenReport:
    """Rank of lam*I - T by Bareiss elimination, kernel basis by Gauss-Jordan."""
    lam = rational(lam)
    t = T.dim
    shifted = tuple(
        tuple((lam if i == j else 0) - x for j, x in enumerate(row)) for i, row in enumerate(T.entries)
    )
    rank = bareiss_rank(shifted)
    basis = tuple(nullspace(shifted, t))
    if rank + len(basis) != t:
        raise AssertionError(f"rank-nullity fails: {rank} + {len(basis)} != {t}")
    return EigenReport(lam, rank, len(basis), basis)


def char_poly_oracle(T: TruncatedOperator) -> Poly:
    if T.dim > ORACLE_MAX_DIM:
        raise ValueError("oracle limited to small truncations")
    return char_poly(T.entries)


@dataclass(frozen=True)
class ComparisonReport:
    matrix: TruncatedOperator
    theta: Vec
    char_poly: Poly
    sigma_p: dict  # rational eigenvalue -> EigenReport
    algebraic_multiplicity: dict
    irrational_degree: int
    relation: str

    @property
    def theta_set(self) -> frozenset:
        return frozenset(self.theta)

    @property
    def eigen_set(self) -> frozenset:
        return frozenset(self.sigma_p)

    def to_json(self) -> dict:
        pts = lambda s: [str(x) for x in sorted(s)]  # noqa: E731
        return {
            "matrix": self.matrix.to_json(),
            "theta": [str(x) for x in self.theta],
            "char_poly": self.char_poly.to_json(),
            "sigma_p": pts(self.eigen_set),
            "eigen": {str(k): r.to_json() for k, r in sorted(self.sigma_p.items())},
            "algebraic_multiplicity": {str(k): m for k, m in sorted(self.algebraic_multiplicity.items())},
            "irrational_degree": self.irrational_degree,
            "theta_eigenvalues": pts(self.theta_set & self.eigen_set),
            "theta_not_eigenvalues": pts(self.theta_set - self.eigen_set),
            "eigenvalues_not_theta": pts(self.eigen_set - self.theta_set),
            "relation": self.relation,
        }


def _relation(theta: frozenset, eig: frozenset) -> str:
    if theta == eig:
        return "equal"
    if eig < theta:
        return "sigma_p subset theta"
    if theta < eig:
        return "theta subset sigma_p"
    if not theta & eig:
        return "disjoint"
    return "overlapping"


def spectrum_compare(lambda_prefix: Iterable, pert: FiniteRankPerturbation) -> ComparisonReport:
    """Rational point spectrum of the truncation versus the theta values.

    Reports the set relation only; nothing is asserted about which way it goes.
    """
    T = assemble(lambda_prefix, pert)
    if T.dim > ORACLE_MAX_DIM:
        raise ValueError("oracle limited to small truncations")
    theta = theta_sequence(T.lambdas, pert)
    f = char_poly_oracle(T)
    roots = rational_roots(f)
    eig = {r: is_eigenvalue(T, r) for r in roots}
    for r, rep in eig.items():
        if not rep.is_eigenvalue:
            raise AssertionError(f"root {r} of the characteristic polynomial has trivial kernel")
    return ComparisonReport(
        T, theta, f, eig, roots, f.degree - sum(roots.values()),
        _relation(frozenset(theta), frozenset(eig)),
    )


def column(T: TruncatedOperator, j: int) -> Vec:
    return tuple(T.entries[i][j] for i in range(T.dim))


def basis_images(lambda_prefix: Iterable, pert: FiniteRankPerturbation) -> list[Vec]:
    """T e_j for each j, via :func:`apply` rather than the matrix."""
    return [apply(lambda_prefix, pert, basis_vector(j, pert.dim)) for j in range(pert.dim)]
