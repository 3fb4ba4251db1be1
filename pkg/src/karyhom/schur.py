"""Homology as GL(V)-modules: weight characters, Schur decompositions, bounds.

For a weight-graded algebra the boundary maps preserve every torus
weight, so each homology group carries a polynomial GL(V)-character.
The character is read off block by block (kernel minus image per weight)
and decomposed into Schur modules by highest-weight peeling: repeatedly
subtract the character of the lexicographically greatest dominant weight
present.  All of it is exact integer combinatorics; Schur characters are
generated by semistandard-tableau enumeration and dimensions by the
hook content formula.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .algebra import KaryAlgebra
from .chains import monomial_weight, wedge_basis, weight_blocks
from .errors import ConsistencyError, InputError
from .matrices import rank
from .util import comb0

# -- partitions and Schur dimensions -------------------------------------


def normalize_partition(parts) -> tuple:
    """Validate weakly decreasing positive parts; returns a tuple."""
    parts = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in parts):
        raise InputError(f"partition parts must be nonnegative: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise InputError(f"parts must be weakly decreasing: {parts}")
    return parts


def conjugate_partition(parts) -> tuple:
    parts = normalize_partition(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > c) for c in range(parts[0]))


def schur_dim(partition, n: int) -> int:
    """dim S_lambda(C^n) by the hook content formula; 0 if rows exceed n."""
    lam = normalize_partition(partition)
    if len(lam) > n:
        return 0
    conj = conjugate_partition(lam)
    value = Fraction(1)
    for r, row_len in enumerate(lam):
        for c in range(row_len):
            content = c - r
            hook = (row_len - c) + (conj[c] - r) - 1
            value *= Fraction(n + content, hook)
    assert value.denominator == 1
    return int(value)


@lru_cache(maxsize=None)
def schur_weight_multiplicities(partition: tuple, n: int) -> dict:
    """Weight multiplicities of S_lambda(C^n): {weight vector: count}.

    Enumerates semistandard tableaux of shape lambda with entries in
    1..n (rows weakly increase, columns strictly increase).
    """
    lam = normalize_partition(partition)
    if len(lam) > n:
        return {}
    counts = {}

    def fill(row_idx, prev_row):
        if row_idx == len(lam):
            yield ()
            return
        length = lam[row_idx]

        def build(col, row):
            if col == length:
                for rest in fill(row_idx + 1, row):
                    yield (row,) + rest
                return
            lo = row[col - 1] if col else 1
            if prev_row is not None and col < len(prev_row):
                lo = max(lo, prev_row[col] + 1)
            for v in range(lo, n + 1):
                yield from build(col + 1, row + (v,))

        yield from build(0, ())

    for tableau in fill(0, None):
        weight = [0] * n
        for row in tableau:
            for v in row:
                weight[v - 1] += 1
        key = tuple(weight)
        counts[key] = counts.get(key, 0) + 1
    return counts


# -- characters from weight blocks ----------------------------------------


def character_by_weights(alg: KaryAlgebra, t: int, *, jobs: int = 1) -> dict:
    """GL(V)-character of the homology at layout degree t.

    For each total weight w the multiplicity is the block kernel of d_t
    minus the block rank of d_{t+k-1}; zero entries are dropped.
    """
    if alg.weights is None:
        raise InputError("character requires a weight-graded algebra")
    k = alg.arity
    if t < 1 or (t - 1) % (k - 1) != 0 or t > alg.dim:
        raise InputError(f"{t} is not a positive chain degree for arity {k}")

    if t >= k:
        cols = {}
        out_rank = {}
        for w, block in weight_blocks(alg, t).items():
            cols[w] = len(block.column_monomials)
            out_rank[w] = rank(block.matrix)
    else:  # t == 1: the boundary below is the zero augmentation
        cols = {}
        for mono in wedge_basis(alg, t):
            w = monomial_weight(alg, mono)
            cols[w] = cols.get(w, 0) + 1
        out_rank = {w: 0 for w in cols}

    in_rank = {}
    if t + k - 1 <= alg.dim:
        for w, block in weight_blocks(alg, t + k - 1).items():
            in_rank[w] = rank(block.matrix)

    table = {}
    for w in cols:
        mult = cols[w] - out_rank[w] - in_rank.get(w, 0)
        if mult < 0:
            raise ConsistencyError(f"negative multiplicity {mult} at weight {w}")
        if mult:
            table[w] = mult
    return table


def check_weight_symmetry(table: dict) -> None:
    """A polynomial character is symmetric under permuting coordinates."""
    orbits = {}
    for w, m in table.items():
        orbits.setdefault(tuple(sorted(w, reverse=True)), []).append((w, m))
    for dom, members in orbits.items():
        mults = {m for _, m in members}
        orbit_size = _distinct_permutation_count(dom)
        if len(mults) != 1 or len(members) != orbit_size:
            raise ConsistencyError(
                f"weight table is not symmetric on the orbit of {dom}"
            )


def _distinct_permutation_count(values) -> int:
    counts = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    total = math.factorial(len(values))
    for c in counts.values():
        total //= math.factorial(c)
    return total


def decompose_character(table: dict, n: int):
    """Highest-weight peeling of a symmetric weight table.

    Returns [(partition, multiplicity), ...] in peeling order (dominance
    downward); re-expanding through Schur characters reproduces the
    input exactly, otherwise a ConsistencyError is raised.
    """
    work = {tuple(w): int(m) for w, m in table.items() if m}
    for w in work:
        if len(w) != n:
            raise InputError(f"weight {w} does not live in Z^{n}")
    check_weight_symmetry(work)

    out = []
    while work:
        dominant = [w for w in work if all(a >= b for a, b in zip(w, w[1:]))]
        if not dominant:
            raise ConsistencyError("nonzero table without a dominant weight")
        lam_w = max(dominant)
        mult = work[lam_w]
        if mult < 0:
            raise ConsistencyError(f"negative multiplicity at {lam_w}")
        lam = normalize_partition(lam_w)
        for w2, c in schur_weight_multiplicities(lam, n).items():
            nv = work.get(w2, 0) - mult * c
            if nv < 0:
                raise ConsistencyError(
                    f"peeling {lam} drove weight {w2} negative"
                )
            if nv:
                work[w2] = nv
            else:
                work.pop(w2, None)
        out.append((lam, mult))
    return out


def expand_decomposition(decomposition, n: int) -> dict:
    """Inverse of decompose_character (for round-trip checks)."""
    table = {}
    for lam, mult in decomposition:
        for w, c in schur_weight_multiplicities(normalize_partition(lam), n).items():
            table[w] = table.get(w, 0) + mult * c
    return {w: m for w, m in table.items() if m}


def decomposition_dimension(decomposition, n: int) -> int:
    return sum(mult * schur_dim(lam, n) for lam, mult in decomposition)


# -- closed-form lower bounds ---------------------------------------------


def lower_bound_betti(n: int, k: int, i: int) -> int:
    """Lower bound for the Betti number at degree i(k-1)+1, i >= 2.

    Uses x = C(n, k), the dimension of the k-th exterior power of V:

        C(n,k) C(x,a) - C(n,2k) C(x,a-1) - C(x,a+1),  a = (i-1)(k-1).
    """
    if i < 2:
        raise InputError(f"the bound applies for i >= 2, got {i}")
    if n < k:
        raise InputError(f"need n >= k, got n={n}, k={k}")
    a = (i - 1) * (k - 1)
    x = comb0(n, k)
    return (
        comb0(n, k) * comb0(x, a)
        - comb0(n, 2 * k) * comb0(x, a - 1)
        - comb0(x, a + 1)
    )


def second_homology_bound(n: int, k: int) -> int:
    """Lower bound for the Betti number at degree k:

        C(n,k) C(n,k-1) - C(n,2k-1).
    """
    if n < k:
        raise InputError(f"need n >= k, got n={n}, k={k}")
    return comb0(n, k) * comb0(n, k - 1) - comb0(n, 2 * k - 1)


def asymptotic_bound(n: int, k: int, i: int) -> float:
    """Asymptotic form of lower_bound_betti for large n (diagnostic only):

        e^{2k} n^{2k} / (2 k^{2k})
            * (1/(pi k) - (a+1) / (sqrt(pi k) 2^{2k}))
            * C(x, a) / ((a+1)(x-a+1)),  a = (i-1)(k-1), x = C(n,k).
    """
    a = (i - 1) * (k - 1)
    x = comb0(n, k)
    leading = (math.e ** (2 * k)) * float(n) ** (2 * k) / (2 * float(k) ** (2 * k))
    coeff = 1.0 / (math.pi * k) - (a + 1) / (math.sqrt(math.pi * k) * 2 ** (2 * k))
    return leading * coeff * comb0(x, a) / ((a + 1) * (x - a + 1))


def asymptotic_leading_coefficient_positive(k: int, i: int) -> bool:
    a = (i - 1) * (k - 1)
    return 1.0 / (math.pi * k) > (a + 1) / (math.sqrt(math.pi * k) * 2 ** (2 * k))


def pieri_dimension_check(x: int, alpha: int) -> bool:
    """Dimension identity behind the tensor split of W (x) wedge^a W:

        x * C(x, a) == C(x, a+1) + dim S_{(2,1^{a-1})}(C^x).
    """
    if x < 1 or alpha < 1:
        raise InputError("need x >= 1 and alpha >= 1")
    lam = (2,) + (1,) * (alpha - 1)
    return x * comb0(x, alpha) == comb0(x, alpha + 1) + schur_dim(lam, x)


def second_homology_summands(k: int, use_statement_exponent: bool = False):
    """Schur modules guaranteed inside the degree-k homology of the free
    2-step algebra: S_{2^j 1^{2k-2j-1}} for j = 1..k-1.

    The alternative exponent 2k-2j+1 is exposed for comparison; it gives
    the wrong total degree and is not contained (see tests).
    """
    shift = 1 if use_statement_exponent else -1
    out = []
    for j in range(1, k):
        ones = 2 * k - 2 * j + shift
        if ones < 0:
            continue
        out.append((2,) * j + (1,) * ones)
    return out


# -- representation stability ----------------------------------------------


def stability_check(k: int, t: int, n_range, *, jobs: int = 1) -> dict:
    """Decompose the degree-t homology of free 2-step algebras across n.

    The decomposition is reported per n; the verdict says from which n
    on the multiset of partitions stays constant through the end of the
    range (partitions with more rows than n can only appear once n
    admits them).
    """
    from .families import free_two_step

    n_values = sorted(n_range)
    if not n_values:
        raise InputError("empty dimension range")
    per_n = {}
    for n in n_values:
        table = character_by_weights(free_two_step(k, n), t, jobs=jobs)
        per_n[n] = sorted(decompose_character(table, n))

    last = per_n[n_values[-1]]
    stable_from = None
    for n in reversed(n_values):
        if per_n[n] == last:
            stable_from = n
        else:
            break
    stable = stable_from is not None and stable_from < n_values[-1]
    return {
        "k": k,
        "degree": t,
        "per_n": per_n,
        "stable_from": stable_from,
        "stable": stable,
        "tail_partitions": last,
    }
