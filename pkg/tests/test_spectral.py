from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ultraspec.props import range_kernel_sweep, spectral_battery, spectral_identities
from ultraspec.spectral import (
    ExplicitProfile,
    GeometricFamily,
    UnionProfile,
    ValueSet,
    accumulation_points,
    cantor_pair,
    cantor_unpair,
    closure_points,
    cokernel_dim,
    diagonal_prefix,
    finite_rank_diag_report,
    fredholm_status,
    kernel_range_indices,
    multiplicity,
    phi2_diagonal,
    phi2_profile,
    profile_from_json,
    profile_to_json,
    range_equals_kernel_perp,
    spectrum_report,
)
from ultraspec.valuations import INF

F = Fraction
GEO = GeometricFamily(5, 1, 5)


def test_multiplicity_examples():
    assert multiplicity(ExplicitProfile(((2, 3), (7, INF))), 2) == 3
    assert multiplicity(ExplicitProfile(((2, 3),)), 5) == 0
    assert multiplicity(GEO, 25) == 1
    assert multiplicity(GEO, 30) == 0
    assert multiplicity(GEO, F(1, 5)) == 0


def test_cokernel_examples():
    assert cokernel_dim(ExplicitProfile(((2, 3),)), 2) == 3
    assert cokernel_dim(ExplicitProfile(((2, 3),)), 0) == 0
    assert cokernel_dim(GEO, 1) == 1


def test_fredholm_examples():
    st_ = fredholm_status(ExplicitProfile(((2, 3),)), 2)
    assert st_.index_zero and st_.eta == st_.delta == 3 and st_.index == 0
    st_ = fredholm_status(ExplicitProfile(((7, INF),)), 7)
    assert not st_.index_zero and st_.kind == "infinite-multiplicity" and st_.index is None
    st_ = fredholm_status(GEO, 3)
    assert st_.kind == "resolvent" and st_.eta == st_.delta == 0
    assert fredholm_status(GEO, 0).kind == "boundary"


def test_closure_examples():
    assert closure_points(GEO) == ValueSet(frozenset({F(0)}), (GEO,))
    assert closure_points(ExplicitProfile(((1, 1), (2, 1)))) == ValueSet(frozenset({F(1), F(2)}))
    two = UnionProfile((GEO, GeometricFamily(5, 2, 25)))
    c = closure_points(two)
    assert 0 in c and 2 * 25**3 in c and 5**7 in c and 3 not in c


def test_spectrum_report_geometric():
    r = spectrum_report(GEO)
    assert r.sigma_e_prime == {0} and r.sigma_e_double_prime == frozenset() and r.sigma_e == {0}
    assert r.point_spectrum == ValueSet(families=(GEO,))
    assert r.to_json()["sigma_e"] == ["0"]


def test_spectrum_report_phi2_truncated():
    alphas = [F(5**n) for n in range(1, 6)]
    r = spectrum_report(ExplicitProfile(tuple((a, INF) for a in alphas)))
    assert r.sigma_e_double_prime == set(alphas)
    assert r.sigma_e >= r.point_spectrum.points


def test_spectrum_report_single_eigenvalue():
    r = spectrum_report(ExplicitProfile(((3, 1),)))
    assert r.sigma_e == frozenset()
    assert r.sigma == r.point_spectrum == ValueSet(frozenset({F(3)}))


def test_finite_rank_examples():
    r = finite_rank_diag_report(ExplicitProfile(((0, INF), (2, 1), (3, 2))))
    assert r.sigma.points == {0, 2, 3} and r.sigma_e == {0}
    r = finite_rank_diag_report(ExplicitProfile(((0, INF),)))
    assert r.sigma.points == r.sigma_e == {0}
    r = finite_rank_diag_report(ExplicitProfile(((0, INF), (5, 1))))
    assert r.statuses[F(5)].index_zero


def test_finite_rank_rejects_other_profiles():
    with pytest.raises(ValueError):
        finite_rank_diag_report(ExplicitProfile(((1, INF),)))
    with pytest.raises(ValueError):
        finite_rank_diag_report(ExplicitProfile(((0, INF), (2, INF))))


def test_range_kernel_examples():
    prof = ExplicitProfile(((2, 2), (3, 1)))
    assert diagonal_prefix(prof, 3) == [2, 2, 3]
    assert kernel_range_indices(prof, 2, 3) == ({0, 1}, {2})
    assert range_equals_kernel_perp(prof, 2, 3)
    assert kernel_range_indices(prof, 5, 3) == (frozenset(), {0, 1, 2})
    assert range_equals_kernel_perp(prof, 5, 3)
    assert kernel_range_indices(GEO, 5, 6)[0] == {1}
    assert range_equals_kernel_perp(GEO, 5, 6)


def test_range_kernel_with_weights():
    assert range_equals_kernel_perp(GEO, 25, 5, omega=[1, 5, F(1, 3), -2, 7])
    assert not range_equals_kernel_perp(GEO, 25, 3, omega=[1, 0, 1])


def test_profile_validation():
    with pytest.raises(ValueError):
        ExplicitProfile(((1, 1), (1, 2)))
    with pytest.raises(ValueError):
        GeometricFamily(5, 1, 2)
    with pytest.raises(ValueError):
        GeometricFamily(5, 0, 5)
    with pytest.raises(ValueError):
        UnionProfile((GEO, GeometricFamily(3, 1, 3)))
    with pytest.raises(ValueError):
        UnionProfile((GEO,), (F(25),))


def test_declared_accumulation_is_validated():
    near = UnionProfile((ExplicitProfile(tuple((1 + 5 ** (n + 1), 1) for n in range(12))),), (F(1),), 5)
    assert accumulation_points(near) == (frozenset({F(1)}), [])
    far = UnionProfile((ExplicitProfile(((2, 1), (3, 1))),), (F(1),), 5)
    acc, warnings = accumulation_points(far)
    assert acc == {1} and len(warnings) == 1
    assert spectrum_report(far).warnings


def test_phi2_profile_matches_pairing():
    alphas = [F(5**n) for n in range(1, 11)]
    r = spectrum_report(phi2_profile(alphas, 5, [0]))
    assert r.sigma_e == r.sigma.points == set(alphas) | {0}
    diag = phi2_diagonal(lambda n: 5 ** (n + 1), 15)
    for i, v in enumerate(diag):
        n, _ = cantor_unpair(i)
        assert v == 5 ** (n + 1)


@given(st.integers(0, 200), st.integers(0, 200))
def test_cantor_pairing_is_bijective(n, k):
    assert cantor_unpair(cantor_pair(n, k)) == (n, k)


@given(st.integers(0, 10**6))
def test_cantor_unpair_inverts(i):
    assert cantor_pair(*cantor_unpair(i)) == i


def test_profile_json_round_trip():
    for _, prof in spectral_battery():
        again = profile_from_json(profile_to_json(prof))
        assert profile_to_json(again) == profile_to_json(prof)
        assert diagonal_prefix(again, 12) == diagonal_prefix(prof, 12)


def test_profile_json_from_documented_forms():
    ex = profile_from_json({"kind": "explicit", "entries": [{"value": "2", "mult": 3}, {"value": "7", "mult": "inf"}]})
    assert multiplicity(ex, 7) is INF
    geo = profile_from_json({"kind": "geometric", "p": 5, "c": "1", "alpha": "5", "count_hint": 20})
    assert geo == GEO
    un = profile_from_json({"kind": "union", "parts": [profile_to_json(GEO)], "accumulation": []})
    assert multiplicity(un, 125) == 1
    with pytest.raises(ValueError):
        profile_from_json({"kind": "nope"})


def test_battery_is_large_enough():
    names = [n for n, _ in spectral_battery()]
    assert len(names) >= 20
    for kind in ("explicit", "geometric", "union", "finite-rank", "phi2"):
        assert any(n.startswith(kind) for n in names)


def test_spectral_identities_hold_on_battery():
    res = spectral_identities()
    assert res.failures == 0, res.examples


def test_range_kernel_small_truncations():
    res = range_kernel_sweep(max_t=6)
    assert res.failures == 0, res.examples


explicit_profiles = st.dictionaries(
    st.integers(-6, 6).map(F), st.one_of(st.integers(1, 4), st.just(INF)), min_size=1, max_size=5
).map(lambda d: ExplicitProfile(tuple(d.items())))


@given(explicit_profiles, st.integers(-8, 8))
def test_explicit_eta_equals_delta(prof, lam):
    assert multiplicity(prof, lam) == cokernel_dim(prof, lam)
    rep = spectrum_report(prof, [lam])
    assert rep.sigma_e == rep.sigma_e_double_prime == {v for v, m in prof.entries if m is INF}
    assert rep.sigma_e_prime == frozenset()


@given(st.sampled_from([2, 3, 5]), st.integers(-5, 5).filter(bool), st.integers(1, 3), st.integers(0, 12))
def test_geometric_family_terms(p, c, k, i):
    g = GeometricFamily(p, c, p**k)
    assert multiplicity(g, g.term(i)) == 1 == cokernel_dim(g, g.term(i))
    assert diagonal_prefix(g, i + 1)[-1] == g.term(i)
