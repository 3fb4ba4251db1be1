"""Wedge bases and the shuffle-sum boundary maps of a k-ary algebra.

The chain spaces are exterior powers of the algebra.  The boundary at
degree t contracts one k-bracket:

    d_t(x_1 ^ ... ^ x_t)
        = sum over (k, t-k)-shuffles s of
          sgn(s) [x_{s(1)},...,x_{s(k)}] ^ x_{s(k+1)} ^ ... ^ x_{s(t)}

Monomials are strictly increasing index tuples, enumerated in
lexicographic order, so matrices are reproducible bit for bit.  The
homology layout uses degrees 0, 1, k, 2k-1, ... (step k-1); the boundary
itself makes sense at every degree t >= k and is exposed that way.
"""

from __future__ import annotations

from itertools import combinations
from typing import NamedTuple

from .algebra import KaryAlgebra
from .errors import InputError
from .matrices import SparseIntMatrix, multiply
from .util import insert_with_sign


def wedge_basis(alg: KaryAlgebra, t: int):
    """All C(dim, t) strictly increasing t-tuples, lexicographically."""
    if not 0 <= t <= alg.dim:
        raise InputError(f"wedge degree {t} out of range [0, {alg.dim}]")
    return list(combinations(range(alg.dim), t))


def shuffles(t: int, k: int):
    """(positions, sign) for all (k, t-k)-shuffles of t slots.

    positions are the k chosen 0-based slots in increasing order; the
    complement stays in increasing order; sign is the permutation sign.
    """
    base = k * (k - 1) // 2
    for pos in combinations(range(t), k):
        yield pos, (-1 if (sum(pos) - base) % 2 else 1)


def boundary_image(alg: KaryAlgebra, monomial):
    """d of a single wedge monomial as {output_monomial: coefficient}."""
    k = alg.arity
    t = len(monomial)
    out = {}
    for pos, sign in shuffles(t, k):
        args = tuple(monomial[p] for p in pos)
        vec = alg.brackets.get(args)
        if not vec:
            continue
        pos_set = set(pos)
        rest = tuple(monomial[p] for p in range(t) if p not in pos_set)
        for w, c in vec.items():
            merged, s2 = insert_with_sign(w, rest)
            if s2:
                coeff = sign * s2 * c
                out[merged] = out.get(merged, 0) + coeff
    return {m: v for m, v in out.items() if v}


def differential_matrix(alg: KaryAlgebra, t: int) -> SparseIntMatrix:
    """Matrix of d_t from the degree-t to the degree-(t-k+1) wedge basis."""
    k = alg.arity
    if t < k:
        raise InputError(f"boundary needs degree >= {k}, got {t}")
    if t > alg.dim:
        raise InputError(f"degree {t} exceeds dimension {alg.dim}")
    target = wedge_basis(alg, t - k + 1)
    row_index = {mono: i for i, mono in enumerate(target)}
    entries = {}
    for col, mono in enumerate(wedge_basis(alg, t)):
        for out, coeff in boundary_image(alg, mono).items():
            entries[(row_index[out], col)] = coeff
    return SparseIntMatrix(len(target), len(wedge_basis(alg, t)), entries)


def verify_d_squared(alg: KaryAlgebra):
    """Degrees t where d_{t-k+1} . d_t is not zero (empty = complex)."""
    k = alg.arity
    failing = []
    cache = {}

    def mat(t):
        if t not in cache:
            cache[t] = differential_matrix(alg, t)
        return cache[t]

    for t in range(2 * k - 1, alg.dim + 1):
        if not multiply(mat(t - k + 1), mat(t)).is_zero():
            failing.append(t)
    return failing


def monomial_weight(alg: KaryAlgebra, monomial):
    """Total torus weight of a wedge monomial (requires a graded algebra)."""
    if alg.weights is None:
        raise InputError("algebra carries no weight grading")
    total = [0] * alg.weight_rank
    for i in monomial:
        for a, x in enumerate(alg.weights[i]):
            total[a] += x
    return tuple(total)


class WeightBlock(NamedTuple):
    weight: tuple
    column_monomials: tuple
    row_monomials: tuple
    matrix: SparseIntMatrix


def weight_blocks(alg: KaryAlgebra, t: int):
    """Split d_t into its weight-homogeneous blocks.

    Weight-additivity makes d_t block diagonal: each block maps the
    degree-t monomials of one total weight to the degree-(t-k+1)
    monomials of the same weight.  Returns {weight: WeightBlock}, keyed
    in sorted order; the union of blocks reproduces the full matrix.
    """
    k = alg.arity
    if alg.weights is None:
        raise InputError("algebra carries no weight grading")
    if t < k:
        raise InputError(f"boundary needs degree >= {k}, got {t}")
    if t > alg.dim:
        raise InputError(f"degree {t} exceeds dimension {alg.dim}")

    cols_by_weight = {}
    for mono in wedge_basis(alg, t):
        cols_by_weight.setdefault(monomial_weight(alg, mono), []).append(mono)
    rows_by_weight = {}
    for mono in wedge_basis(alg, t - k + 1):
        rows_by_weight.setdefault(monomial_weight(alg, mono), []).append(mono)

    blocks = {}
    for w in sorted(cols_by_weight):
        cols = cols_by_weight[w]
        rows = rows_by_weight.get(w, [])
        row_index = {mono: i for i, mono in enumerate(rows)}
        entries = {}
        for ci, mono in enumerate(cols):
            for out, coeff in boundary_image(alg, mono).items():
                entries[(row_index[out], ci)] = coeff
        blocks[w] = WeightBlock(w, tuple(cols), tuple(rows), SparseIntMatrix(len(rows), len(cols), entries))
    return blocks


class ChainLayout:
    """Degree bookkeeping for one algebra: 0, 1, k, 2k-1, ... up to dim."""

    def __init__(self, alg: KaryAlgebra):
        self.algebra = alg
        k = alg.arity
        degrees = [0]
        t = 1
        while t <= alg.dim:
            degrees.append(t)
            t += k - 1
        self.degrees = degrees
        self._bases = {}

    def basis(self, t: int):
        if t not in self._bases:
            self._bases[t] = wedge_basis(self.algebra, t)
        return self._bases[t]

    def matrix(self, t: int) -> SparseIntMatrix:
        """Boundary leaving degree t; degree 1 is the zero augmentation."""
        if t == 1:
            return SparseIntMatrix(1, self.algebra.dim, {})
        return differential_matrix(self.algebra, t)
