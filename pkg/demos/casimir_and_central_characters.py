"""The rank-one centre, seen three ways.

Finds the centre of U_q(sl2) in low degree by linear algebra, evaluates the
Casimir on highest weight vectors, and checks that the value only depends on
the dot orbit of the character.
"""
from uqwork.pbw import quantum_group
from uqwork.repr import VermaModule, find_central_elements, hc_eval, sl2_casimir
from uqwork.rootdata import TorusChar, cartan, hc_orbit

alg = quantum_group("A1")
z = sl2_casimir(alg)
print("Casimir z =", z)

found = find_central_elements(alg, 2, 2)
print(f"\nweight-zero slice of degree <= 2, torus window 2: {len(found)} central elements")
for c in found:
    print("  ", c)

print("\nchi_lambda(z) on Verma highest weight vectors:")
for m in (3, -5, 0, -2):
    lam = TorusChar.q_power((m,))
    print(f"  lambda = q^{m:<3d} chi(z) = {hc_eval(z, lam)}")

lam = TorusChar.q_power((3,))
orbit = sorted(hc_orbit(cartan("A1"), lam), key=str)
values = {str(mu): str(hc_eval(z, mu, root=True)) for mu in orbit}
print(f"\ndot orbit of {lam}: {len(orbit)} characters (values in Q(q^(1/2)), written in v = q^(1/2))")
for mu, v in values.items():
    print(f"  {mu:18s} -> {v}")
print("constant on the orbit:", len(set(values.values())) == 1)

# z acts on the whole Verma module by the same scalar
M = VermaModule(alg, lam, 4)
vec = M.apply(alg.F(0) ** 3, M.hw_vector())
zvec = M.apply(z, vec)
ratio = {k: zvec[k] / vec[k] for k in vec}
print("\nz on F^3 v_lambda is a multiple of it:", len(set(map(str, ratio.values()))) == 1)
