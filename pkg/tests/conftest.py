"""Shared test oracles, deliberately independent of the library internals."""

from fractions import Fraction
from itertools import product

from karyhom.algebra import KaryAlgebra


def dense_rank(dense_rows):
    """Plain Gaussian elimination over Fraction; the rank oracle."""
    m = [[Fraction(x) for x in row] for row in dense_rows]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(rows):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def jacobi_residuals_exhaustive(alg: KaryAlgebra):
    """Evaluate the generalized Jacobi identity on *every* basis tuple,
    repeats included (slow; use only on small algebras)."""
    k = alg.arity
    bad = []
    for inner in product(range(alg.dim), repeat=k):
        inner_vec = alg.bracket(inner)
        for outer in product(range(alg.dim), repeat=k - 1):
            residual = dict(alg.bracket_with_vector(inner_vec, outer))
            for i in range(k):
                moved = alg.bracket((inner[i],) + outer)
                for w, c in moved.items():
                    replaced = inner[:i] + (w,) + inner[i + 1 :]
                    for j, cj in alg.bracket(replaced).items():
                        residual[j] = residual.get(j, 0) - c * cj
            if any(residual.values()):
                bad.append(inner + outer)
    return bad


def flip_bracket_signs(alg: KaryAlgebra, rng) -> KaryAlgebra:
    """Negate each stored bracket vector independently (a basis change
    for every family here, hence Betti-invariant)."""
    new = {}
    for args, vec in alg.brackets.items():
        if rng.random() < 0.5:
            new[args] = {i: -c for i, c in vec.items()}
        else:
            new[args] = dict(vec)
    return KaryAlgebra(alg.arity, alg.dim, alg.labels, new, alg.weights)
