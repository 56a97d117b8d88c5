"""Triangular decompositions and the universal parabolic Verma module.

For sl3 with Levi {alpha_1}: multiplication U_q(rbar) x U_q(l) x U_q(r) is
checked degree by degree, then the quotient of the l-finite part by the left
ideal of U_q(r)_{>0} is compared with the l-integrable part of U_q(pbar).
For the Borel of sl2 the same construction specializes to a Verma module.
"""
from uqwork.finiteness import check_corollary_triangular, check_triangular
from uqwork.pbw import quantum_group
from uqwork.repr import VermaModule, parabolic_verma_check, universal_parabolic_verma
from uqwork.rootdata import ParabolicSubset, TorusChar

alg = quantum_group("A2")
P = ParabolicSubset([0])
print("full triangular decomposition, degree <= 3:", check_triangular(alg, P, 3).status)
print("integrable version, degree <= 3:          ", check_corollary_triangular(alg, P, 3).status)

T = universal_parabolic_verma(alg, P, 3)
print("\nquotient dims by degree (torus window 1):", T.dims())
print("canonical map from the U_q(pbar) slice is bijective:", T.bijective)
res = parabolic_verma_check(alg, P, 3)
print("against rbar-basis x Levi-integrable counts:", res.status, res.data)

a1 = quantum_group("A1")
lam = TorusChar.q_power((3,))
res = parabolic_verma_check(a1, ParabolicSubset(), 4, lam=lam)
print(f"\nsl2, P = B, specialized at {lam}: {res.status}")
print("Verma weight multiplicities:", VermaModule(a1, lam, 4).weight_multiplicities())
