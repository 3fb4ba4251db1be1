"""Free 2-step and small free 3-step nilpotent k-ary Lie algebras.

The free 2-step algebra on V is V + wedge^k V with the tautological
bracket; the free 3-step algebra on dim V = k has the Hall basis
x_1..x_k, y = [x_1...x_k], z_i = [x_1,..,^x_i,..,x_k, y].  This demo
inspects the boundary matrices directly and exports one of them in
MatrixMarket form for outside verification.
"""

import io

from karyhom import (
    betti_all,
    check_jacobi,
    differential_matrix,
    free_three_step_small,
    free_two_step,
    rank,
    verify_d_squared,
    write_matrix_market,
)

f3 = free_three_step_small(3)
print("free 3-step, k=3: basis", ", ".join(f3.labels))
print("  Jacobi violations:", len(check_jacobi(f3)), " d^2 failures:", verify_d_squared(f3))
rep = betti_all(f3, description="free3(k=3)")
print("  Betti:", rep.betti, " total:", rep.total)

for t in (3, 5, 7):
    m = differential_matrix(f3, t)
    print(f"  boundary at degree {t}: {m.rows}x{m.cols}, nnz {m.nnz}, rank {rank(m)}")

buf = io.StringIO()
write_matrix_market(differential_matrix(f3, 5), buf)
print("\nMatrixMarket export of the degree-5 boundary (first lines):")
print("\n".join(buf.getvalue().splitlines()[:6]))

print()
for k in (4, 5):
    rep = betti_all(free_three_step_small(k), description=f"free3(k={k})")
    print(f"{rep.algebra}: Betti {rep.betti}, total {rep.total}")

print()
for k, n in ((2, 4), (3, 4), (3, 5)):
    alg = free_two_step(k, n)
    rep = betti_all(alg, description=f"free2(k={k}, n={n})")
    print(f"{rep.algebra} (dim {alg.dim}): total homology {rep.total}")
    print("   Betti:", rep.betti)
