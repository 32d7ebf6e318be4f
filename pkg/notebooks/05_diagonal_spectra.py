"""
Spectra of diagonal operators
=============================

A diagonal operator is described by a profile of eigenvalues. Its
essential spectrum is where lam*I - D fails to be Fredholm of index 0:
accumulation points that are not eigenvalues, and eigenvalues of
infinite multiplicity.
"""

from fractions import Fraction

from ultraspec import INF, ExplicitProfile, GeometricFamily, UnionProfile, spectrum_report
from ultraspec.spectral import finite_rank_diag_report, fredholm_status, phi2_profile, range_equals_kernel_perp

# lambda_i = 5^i accumulates 5-adically at 0
geo = GeometricFamily(5, 1, 5)
r = spectrum_report(geo, probes=[0, 25, 3])
print("sigma_e  =", [str(x) for x in sorted(r.sigma_e)])
for lam, st in r.statuses.items():
    print(f"  {lam}: {st.kind} eta={st.eta} delta={st.delta}")

# %%
# Finite rank: 0 with infinite multiplicity and finitely many other values.
fr = finite_rank_diag_report(ExplicitProfile(((0, INF), (2, 1), (3, 2))))
print("sigma =", [str(x) for x in sorted(fr.sigma.points)], "sigma_e =", [str(x) for x in sorted(fr.sigma_e)])

# every alpha_n repeated infinitely often: the whole spectrum is essential
ph = spectrum_report(phi2_profile([5**n for n in range(1, 8)], 5, [0]))
print("sigma_e == sigma:", ph.sigma_e == ph.sigma.points)

# a declared accumulation point that the eigenvalues never approach is flagged
odd = UnionProfile((ExplicitProfile(((2, 1), (3, 1))),), (Fraction(1),), 5)
print(spectrum_report(odd).warnings)

print(fredholm_status(ExplicitProfile(((7, INF),)), 7).to_json())

# %%
# On a truncation the range of lam*I - D is spanned by the coordinates
# outside the kernel.
print(all(range_equals_kernel_perp(geo, lam, t) for lam in (0, 1, 5, 25) for t in range(1, 21)))
