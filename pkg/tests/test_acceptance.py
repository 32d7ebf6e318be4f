"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line with its check count. The
file also runs standalone: ``python3 tests/test_acceptance.py``.
"""

import os
import random
import sys
from pathlib import Path

import pytest

from ultraspec import cli, props
from ultraspec.linalg import matrix
from ultraspec.perturbation import (
    FiniteRankPerturbation,
    assemble,
    char_poly_oracle,
    is_eigenvalue,
    spectrum_compare,
    theta_sequence,
)

DATA = Path(__file__).parent / "data"
SEED = 20240611


def _line(label, res):
    status = "PASS" if res.failures == 0 else "FAIL"
    return f"[{status}] {label}: {res.checks} checks, {res.failures} failures"


@pytest.fixture
def report(capsys):
    def emit(label, res):
        with capsys.disabled():
            print("\n" + _line(label, res))
        assert res.failures == 0, res.examples

    return emit


def c01_valuation_axioms():
    res = props.PropResult("c01", "valuation axioms")
    for p in (2, 3, 5, 7):
        props.valuation_sweep(p, 40, res)
    return res


def c02_integer_bound():
    res = props.PropResult("c02", "integer boundedness")
    for p in (2, 3, 5, 7):
        props.integer_bound_sweep(p, 10**6, res)
    return res


def c03_isosceles():
    return props.isosceles_suite(random.Random(SEED + 3), 10**4, primes=(2, 3, 5))


def c04_ball_dichotomy():
    return props.ball_dichotomy_suite(random.Random(SEED + 4), 10**3, 10**3, primes=(2, 3, 5))


def c05_geometric_series():
    return props.geometric_series_sweep((2, 3, 5, 7), 12)


def c06_cauchy_schwarz():
    return props.cauchy_schwarz_suite(random.Random(SEED + 6), 10**4, primes=(2, 3, 5), max_t=6)


def c07_spectral_identities():
    return props.spectral_identities()


def c08_range_kernel_perp():
    return props.range_kernel_sweep(max_t=20)


def c09_theta_diagonal():
    return props.theta_diagonal_suite(random.Random(SEED + 9), 10**3, max_t=10, max_m=3)


def c10_eigen_oracle():
    return props.eigen_oracle_suite(random.Random(SEED + 10), 200, probes=50, max_t=6)


def c11_worked_case():
    res = props.PropResult("c11", "worked triangular case")
    pert = FiniteRankPerturbation.rank_one([1, 1, 1], [1, 1, 0], [0, 1, 1])
    T = assemble([1, 2, 3], pert)
    res.check(T.entries == matrix([[1, 1, 1], [0, 3, 1], [0, 0, 3]]), T.entries)
    res.check(theta_sequence([1, 2, 3], pert) == (1, 3, 3))
    cmp = spectrum_compare([1, 2, 3], pert)
    res.check(cmp.eigen_set == {1, 3}, cmp.eigen_set)
    res.check(is_eigenvalue(T, 3).kernel_dim == 1)
    res.check(is_eigenvalue(T, 1).kernel_dim == 1)
    # oracle: the characteristic polynomial vanishes exactly at 1 and 3
    f = char_poly_oracle(T)
    res.check(f(1) == 0 and f(3) == 0 and f(2) != 0, f)

    cwd = os.getcwd()
    os.chdir(DATA)
    try:
        argv = ["perturb", "--lambda", "[1,2,3]", "--omega", "[1,1,1]", "--pairs", "worked_pairs.json",
                "--check-lambda", "3", "--truncate", "3"]
        first, second = cli.run(argv), cli.run(argv)
    finally:
        os.chdir(cwd)
    res.check(first == second and first[0] == 0)
    golden = (DATA / "worked_report.json").read_text(encoding="utf-8")
    res.check(first[1] == golden, "report bytes differ from the stored report")
    return res


CRITERIA = [
    ("C1 valuation axioms, p in {2,3,5,7}, |a|,b <= 40", c01_valuation_axioms),
    ("C2 |n|_p <= 1 for |n| <= 10^6", c02_integer_bound),
    ("C3 isosceles triangles, 10^4 per prime", c03_isosceles),
    ("C4 ball dichotomy vs brute-force membership", c04_ball_dichotomy),
    ("C5 geometric series |sum p^n - 1/(1-p)|_p <= p^-N", c05_geometric_series),
    ("C6 Cauchy-Schwarz in K^t", c06_cauchy_schwarz),
    ("C7 spectral identities on the profile battery", c07_spectral_identities),
    ("C8 range = kernel complement at t <= 20", c08_range_kernel_perp),
    ("C9 theta equals the assembled diagonal", c09_theta_diagonal),
    ("C10 eigen test vs characteristic polynomial", c10_eigen_oracle),
    ("C11 worked triangular case and stable report", c11_worked_case),
]


@pytest.mark.parametrize("label, fn", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(label, fn, report):
    report(label, fn())


if __name__ == "__main__":
    failed = 0
    for label, fn in CRITERIA:
        res = fn()
        failed += res.failures > 0
        print(_line(label, res), flush=True)
    sys.exit(1 if failed else 0)
