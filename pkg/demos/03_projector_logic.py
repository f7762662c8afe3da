"""
Projectors and quantum logic
============================

Rank-one projectors P_q = q q^+ of orthogonal quantum sets commute, and the
operations not P = 1 - P, P and R = PR, P or R = P + R - PR on their sums form
a Boolean algebra. Non-commuting projectors break it. Diagonal operators
carrying fuzzy sets reproduce the algebraic fuzzy connectives.
"""
import numpy as np

from qulogic import (
    FuzzySet, QuSet, basis, commutator, compose, diagonal_operator, diagonalize_family,
    family_from_orthonormal, fuzzy_and, fuzzy_or, is_projector, logic_and, logic_not, logic_or,
    mixed_state, normalize, project_set, projector_from_quset,
)

rng = np.random.default_rng(0)
M = 8
Q, _ = np.linalg.qr(rng.normal(size=(M, 3)) + 1j * rng.normal(size=(M, 3)))
fam = family_from_orthonormal([QuSet(Q[:, k]) for k in range(3)])

P12, P23 = project_set(fam, {1, 2}), project_set(fam, {2, 3})
print("P{1,2} and P{2,3} == P{2}:", np.allclose(logic_and(P12, P23).matrix, project_set(fam, {2}).matrix))
print("P{1,2} or  P{2,3} == P{1,2,3}:", np.allclose(logic_or(P12, P23).matrix, project_set(fam, {1, 2, 3}).matrix))
print("results are projectors:", is_projector(logic_or(P12, P23)), is_projector(logic_not(P12)))

# One unitary brings every member to the form diag(0, .., 1, .., 0).
U = diagonalize_family(fam).matrix
for k, P in enumerate(fam.projectors, 1):
    d = U @ P.matrix @ U.conj().T
    print(f"U P{k} U^-1 diagonal:", np.round(np.diag(d).real, 6))

# Non-commuting pair on two cells.
P = projector_from_quset(basis(1, 2))
R = projector_from_quset(normalize([1, 1]))
J = logic_or(P, R).matrix
print("\n[P, R] =\n", commutator(P, R).matrix.real)
print("P or R =\n", J.real, "\nidempotent?", np.allclose(J @ J, J))

# Mixed state: weighted sum of orthogonal projectors.
rho = mixed_state([0.5, 0.3, 0.2], fam).R.matrix
print("\ntrace R =", np.trace(rho).real.round(12), " eigenvalues:", np.round(np.linalg.eigvalsh(rho)[-3:], 6))

# Diagonal operators are fuzzy sets in disguise.
a, b = FuzzySet(rng.random(4)), FuzzySet(rng.random(4))
Da, Db = diagonal_operator(a), diagonal_operator(b)
print("\nD_a D_b        =", np.diag(compose(Da, Db).matrix).real.round(4), " a*b      =", fuzzy_and(a, b).values.round(4))
print("D_a or D_b     =", np.diag(logic_or(Da, Db).matrix).real.round(4), " a+b-ab   =", fuzzy_or(a, b).values.round(4))
