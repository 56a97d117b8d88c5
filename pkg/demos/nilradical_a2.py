"""Quantized nilradicals for the maximal parabolic of sl3 with Levi {alpha_1}.

U_q(r) is computed as coinvariants of U_q(p) over U_q(l); its graded pieces
are compared with monomials in the two roots alpha_2 and alpha_1 + alpha_2,
and its q -> 1 limit with the abelian classical nilradical.
"""
from uqwork.finiteness import check_nilradical, construct_nilradical, specialize_q1_check
from uqwork.pbw import quantum_group
from uqwork.rootdata import ParabolicSubset

alg = quantum_group("A2")
P = ParabolicSubset([0])

for side in ("r", "rbar"):
    N = construct_nilradical(alg, P, side, 3)
    print(f"U_q({side}) graded dims up to degree 3: {N.dims()}")
    for nu, basis in sorted(N.graded_basis.items()):
        if sum(nu) == 1 or sum(nu) == 2:
            for b in basis:
                print(f"   weight {nu}: {b}")
    res = check_nilradical(alg, N)
    print(f"   stability, coideal, closure: {res.status}  {res.data}\n")

N = construct_nilradical(alg, P, "r", 3)
res = specialize_q1_check(alg, N)
print("q -> 1 against the classical bracket table:", res.status)
for w in res.witnesses:
    print("   ", w)
