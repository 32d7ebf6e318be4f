"""
Finite-rank perturbations
=========================

T = D + u (x) v with (u (x) v)(x) = <x, v>_omega u. The diagonal of T is
theta_j = lambda_j + omega_j u_j v_j. How do the theta values compare to
the eigenvalues of T?
"""

from ultraspec import FiniteRankPerturbation, assemble, is_eigenvalue, spectrum_compare, theta_sequence

pert = FiniteRankPerturbation.rank_one([1, 1, 1], [1, 1, 0], [0, 1, 1])
T = assemble([1, 2, 3], pert)
for row in T.entries:
    print([str(x) for x in row])
print("theta =", [str(x) for x in theta_sequence([1, 2, 3], pert)])

rep = spectrum_compare([1, 2, 3], pert)
print("char poly:", rep.char_poly, " sigma_p:", [str(x) for x in sorted(rep.eigen_set)], " relation:", rep.relation)
print("kernel at 3:", [[str(c) for c in v] for v in is_eigenvalue(T, 3).kernel_basis])
print("2 is an eigenvalue:", bool(is_eigenvalue(T, 2)))

# %%
# The rational eigenvalues need not be theta values, and some eigenvalues
# may not be rational at all.
rot = FiniteRankPerturbation([1, 1], (([1, 0], [0, 2]), ([0, 1], [1, 0])))
r = spectrum_compare([0, 0], rot)
print(r.char_poly, "rational eigenvalues:", [str(x) for x in sorted(r.eigen_set)], "unresolved degree:", r.irrational_degree)
