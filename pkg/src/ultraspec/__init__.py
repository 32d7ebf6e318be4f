"""Exact non-Archimedean analysis over Q.

p-adic and function-field valuations, ultrametric balls, truncated p-adic
expansions, the max norm on K^t, spectra of diagonal operators and
finite-rank perturbations of them. Every number is a ``Fraction``.
"""

from .numeric import Poly, RationalFunction, parse_rational, rational
from .valuations import (
    INF,
    AbsValue,
    FinitePlace,
    InfinitePlace,
    PAdicContext,
    abs_p,
    dist_p,
    ring_membership,
    vfunc_inf,
    vfunc_px,
    vp_int,
    vp_rat,
)
from .geometry import Ball, Relation, ball_contains, balls_relation, isosceles_witness, sphere_contains
from .padic import (
    ConvergenceError,
    PAdicApprox,
    SequenceOracle,
    approx_from_rational,
    cauchy_check,
    sum_series,
)
from .vectors import inner_omega, inner_t, norm_max
from .spectral import (
    ExplicitProfile,
    GeometricFamily,
    UnionProfile,
    fredholm_status,
    spectrum_report,
    finite_rank_diag_report,
    range_equals_kernel_perp,
    phi2_profile,
)
from .perturbation import (
    FiniteRankPerturbation,
    assemble,
    is_eigenvalue,
    spectrum_compare,
    theta_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "Poly",
    "RationalFunction",
    "parse_rational",
    "rational",
    "INF",
    "AbsValue",
    "FinitePlace",
    "InfinitePlace",
    "PAdicContext",
    "abs_p",
    "dist_p",
    "ring_membership",
    "vfunc_inf",
    "vfunc_px",
    "vp_int",
    "vp_rat",
    "Ball",
    "Relation",
    "ball_contains",
    "balls_relation",
    "isosceles_witness",
    "sphere_contains",
    "ConvergenceError",
    "PAdicApprox",
    "SequenceOracle",
    "approx_from_rational",
    "cauchy_check",
    "sum_series",
    "inner_omega",
    "inner_t",
    "norm_max",
    "ExplicitProfile",
    "GeometricFamily",
    "UnionProfile",
    "fredholm_status",
    "spectrum_report",
    "finite_rank_diag_report",
    "range_equals_kernel_perp",
    "phi2_profile",
    "FiniteRankPerturbation",
    "assemble",
    "is_eigenvalue",
    "spectrum_compare",
    "theta_sequence",
]
