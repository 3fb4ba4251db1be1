"""ACJ-type algebras: homology through the adjoint contraction.

With brackets [z, x^1_i, ..., x^{k-1}_i] = x^k_i, the span of the x's is
a codimension-one abelian ideal, and the whole complex reduces to the
contraction maps theta_j : wedge^j a -> wedge^{j-k+2} a.  The Betti
number at degree t is then

    C(km, t) - C(km, t+k-2) + dim ker theta_{t-1} + dim ker theta_{t+k-2}

which this demo checks against the direct rank computation, degree by
degree.
"""

from karyhom import (
    acj,
    acj_classical_betti,
    acj_homology_via_theta,
    acj_second_homology_formula,
    betti_all,
    rank,
    theta_matrix,
)

for k, m in ((2, 2), (3, 1), (3, 2), (4, 1)):
    alg = acj(k, m)
    rep = betti_all(alg, description=f"acj(k={k}, m={m})")
    print(rep.algebra)
    for t in rep.degrees:
        if t == 0:
            continue
        via = acj_homology_via_theta(alg, t)
        flag = "ok" if via == rep.betti[t] else "MISMATCH"
        print(f"  H^{t}: direct {rep.betti[t]}, via theta kernels {via} [{flag}]")

print()
print("theta ranks for acj(3, 1):")
a = acj(3, 1)
for j in range(0, 4):
    th = theta_matrix(a, j)
    print(f"  theta_{j}: {th.rows}x{th.cols}, rank {rank(th)}")

print()
print("Arity 2 recovers the classical per-degree product formula:")
rep = betti_all(acj(2, 3))
print(" ", {t: (rep.betti[t], acj_classical_betti(3, t)) for t in rep.degrees})

print()
print("The degree-k closed-form candidate works only for m = 1; for m >= 2")
print("it double-counts image elements shared between bracket blocks:")
for m in (1, 2):
    direct = betti_all(acj(3, m)).betti[3]
    print(f"  acj(3,{m}): direct H^3 = {direct}, candidate = "
          f"{acj_second_homology_formula(3, m)}")
