from math import comb

import pytest

from conftest import dense_rank
from karyhom.algebra import KaryAlgebra
from karyhom.chains import (
    ChainLayout,
    boundary_image,
    differential_matrix,
    monomial_weight,
    shuffles,
    verify_d_squared,
    wedge_basis,
    weight_blocks,
)
from karyhom.errors import InputError
from karyhom.families import (
    abelian,
    acj,
    current_algebra,
    free_three_step_small,
    free_two_step,
    heisenberg,
)
from karyhom.matrices import multiply, rank


def test_wedge_basis_counts_and_order():
    h = heisenberg(3, 1)
    basis = wedge_basis(h, 3)
    assert len(basis) == 4
    assert basis == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert wedge_basis(h, 0) == [()]
    assert len(wedge_basis(heisenberg(3, 2), 5)) == 21
    with pytest.raises(InputError):
        wedge_basis(h, 5)


def test_shuffle_set_size_and_signs():
    for t, k in ((5, 3), (4, 2), (6, 4)):
        items = list(shuffles(t, k))
        assert len(items) == comb(t, k)
        # the identity shuffle is positive
        assert items[0] == (tuple(range(k)), 1)
    # a single transposition of adjacent groups flips the sign
    assert ((0, 2), -1) in list(shuffles(3, 2))


def test_differential_heisenberg_3_1():
    h = heisenberg(3, 1)
    m = differential_matrix(h, 3)
    assert (m.rows, m.cols) == (4, 4)
    # only x1^x2^x3 (column 0) maps anywhere, namely to z (row 3)
    assert m.entries == {(3, 0): 1}
    assert rank(m) == 1


def test_differential_abelian_is_zero():
    ab = abelian(3, 5)
    for t in (3, 4, 5):
        assert differential_matrix(ab, t).is_zero()


def test_differential_free3_rank():
    f3 = free_three_step_small(3)
    assert rank(differential_matrix(f3, 3)) == 4
    assert rank(differential_matrix(f3, 5)) == 7


def test_differential_degree_validation():
    h = heisenberg(3, 1)
    with pytest.raises(InputError):
        differential_matrix(h, 2)
    with pytest.raises(InputError):
        differential_matrix(h, 5)


def test_differential_shape_and_entry_range():
    for alg in (heisenberg(2, 3), acj(3, 2), free_two_step(3, 4)):
        k = alg.arity
        for t in range(k, alg.dim + 1):
            m = differential_matrix(alg, t)
            assert m.cols == comb(alg.dim, t)
            assert m.rows == comb(alg.dim, t - k + 1)
            assert all(v in (-1, 1) for v in m.entries.values())


def test_boundary_image_single_monomial():
    f3 = free_three_step_small(3)
    # d(x1^x2^x3^y^z1) per the two bracket families
    img = boundary_image(f3, (0, 1, 2, 3, 4))
    assert img  # nonzero
    m5 = differential_matrix(f3, 5)
    col = wedge_basis(f3, 5).index((0, 1, 2, 3, 4))
    basis3 = wedge_basis(f3, 3)
    expected = {
        (r, col): v for (r, c), v in m5.entries.items() if c == col
    }
    assert {(basis3.index(mono), col): v for mono, v in img.items()} == expected


def test_d_squared_zero_on_families():
    for alg in (
        heisenberg(2, 3),
        heisenberg(3, 2),
        acj(2, 2),
        acj(3, 2),
        free_two_step(2, 4),
        free_two_step(3, 4),
        free_three_step_small(3),
        current_algebra(heisenberg(2, 1), 3),
        abelian(2, 4),
    ):
        assert verify_d_squared(alg) == [], alg


def test_d_squared_detects_broken_structure():
    # dim-7 mutant with a genuinely non-Jacobi bracket: d^2 != 0
    h = heisenberg(3, 2)
    brackets = dict(h.brackets)
    brackets[(0, 2, 6)] = {0: 1}  # [x1_1, x2_1, z] = x1_1
    mutant = KaryAlgebra(3, 7, h.labels, brackets)
    failing = verify_d_squared(mutant)
    assert failing == [5, 6, 7]
    m5 = differential_matrix(mutant, 5)
    m3 = differential_matrix(mutant, 3)
    assert not multiply(m3, m5).is_zero()


def test_weight_blocks_structure():
    f = free_two_step(3, 3)
    blocks = weight_blocks(f, 3)
    b = blocks[(1, 1, 1)]
    assert b.column_monomials == ((0, 1, 2),)
    assert b.row_monomials == ((3,),)
    assert b.matrix.entries == {(0, 0): 1}
    # blocks partition the columns
    assert sum(len(blk.column_monomials) for blk in blocks.values()) == comb(4, 3)


def test_weight_blocks_reassemble_full_matrix():
    f = free_two_step(3, 4)
    t = 5
    full = differential_matrix(f, t)
    cols = wedge_basis(f, t)
    rows = wedge_basis(f, t - 2)
    col_idx = {m: i for i, m in enumerate(cols)}
    row_idx = {m: i for i, m in enumerate(rows)}
    seen = {}
    total_cols = 0
    for blk in weight_blocks(f, t).values():
        total_cols += len(blk.column_monomials)
        for (r, c), v in blk.matrix.entries.items():
            gr = row_idx[blk.row_monomials[r]]
            gc = col_idx[blk.column_monomials[c]]
            seen[(gr, gc)] = v
    assert total_cols == len(cols)
    assert seen == full.entries
    # and the rank splits over blocks
    assert sum(rank(b.matrix) for b in weight_blocks(f, t).values()) == rank(full)


def test_weight_blocks_respect_weights():
    f = free_two_step(2, 3)
    for t in (2, 3):
        for w, blk in weight_blocks(f, t).items():
            for mono in blk.column_monomials:
                assert monomial_weight(f, mono) == w
            for mono in blk.row_monomials:
                assert monomial_weight(f, mono) == w


def test_weight_blocks_require_grading():
    with pytest.raises(InputError):
        weight_blocks(heisenberg(2, 2), 2)
    with pytest.raises(InputError):
        monomial_weight(heisenberg(2, 2), (0, 1))


def test_chain_layout_degrees():
    assert ChainLayout(heisenberg(3, 2)).degrees == [0, 1, 3, 5, 7]
    assert ChainLayout(heisenberg(2, 2)).degrees == [0, 1, 2, 3, 4, 5]
    assert ChainLayout(heisenberg(5, 1)).degrees == [0, 1, 5]
    layout = ChainLayout(heisenberg(3, 1))
    aug = layout.matrix(1)
    assert (aug.rows, aug.cols) == (1, 4) and aug.is_zero()


def test_rank_oracle_on_differentials():
    # spot-check the sparse rank against dense elimination
    for alg, t in ((acj(3, 2), 5), (free_two_step(2, 4), 4), (heisenberg(4, 2), 7)):
        m = differential_matrix(alg, t)
        assert rank(m) == dense_rank(m.to_dense())
