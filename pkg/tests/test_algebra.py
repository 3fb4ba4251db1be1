import io
import random
from itertools import permutations

import pytest

from conftest import jacobi_residuals_exhaustive
from karyhom.algebra import (
    KaryAlgebra,
    Subspace,
    algebra_from_json_dict,
    algebra_to_json_dict,
    center,
    check_jacobi,
    dump_algebra,
    is_nilpotent,
    load_algebra,
    lower_central_series,
)
from karyhom.errors import InputError, LoadError
from karyhom.families import abelian, acj, free_three_step_small, free_two_step, heisenberg


def mutate(alg, args, vec):
    brackets = dict(alg.brackets)
    brackets[args] = vec
    return KaryAlgebra(alg.arity, alg.dim, alg.labels, brackets)


# -- bracket evaluation -------------------------------------------------


def test_bracket_basic_signs():
    h = heisenberg(3, 1)
    assert h.bracket((0, 1, 2)) == {3: 1}
    assert h.bracket((1, 0, 2)) == {3: -1}
    assert h.bracket((0, 0, 1)) == {}
    assert h.bracket((0, 1, 3)) == {}


def test_bracket_errors():
    h = heisenberg(3, 1)
    with pytest.raises(InputError):
        h.bracket((0, 1))
    with pytest.raises(InputError):
        h.bracket((0, 1, 4))


def test_bracket_antisymmetry_exhaustive_small():
    for alg in (heisenberg(2, 2), acj(3, 1), free_two_step(3, 3)):
        k = alg.arity
        base = tuple(range(k))
        ref = alg.bracket(base)
        for perm in permutations(range(k)):
            tup = tuple(base[p] for p in perm)
            sign = _perm_sign(perm)
            expected = {i: sign * c for i, c in ref.items()}
            assert alg.bracket(tup) == expected


def _perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def test_bracket_antisymmetry_randomized():
    rng = random.Random(99)
    alg = free_two_step(3, 5)
    for _ in range(50):
        tup = tuple(rng.sample(range(alg.dim), 3))
        srt = tuple(sorted(tup))
        sign = _perm_sign(tuple(sorted(range(3), key=lambda i: tup[i])))
        expected = {i: sign * c for i, c in alg.bracket(srt).items()}
        assert alg.bracket(tup) == expected


# -- constructor invariants ----------------------------------------------


def test_storage_invariants_enforced():
    with pytest.raises(InputError):
        KaryAlgebra(3, 4, list("abcd"), {(1, 0, 2): {3: 1}})
    with pytest.raises(InputError):
        KaryAlgebra(3, 4, list("abcd"), {(0, 1, 2): {3: 0}})
    with pytest.raises(InputError):
        KaryAlgebra(3, 4, list("abcd"), {(0, 1, 5): {3: 1}})
    with pytest.raises(InputError):
        KaryAlgebra(3, 4, list("abc"), {})


def test_weight_additivity_enforced():
    good = free_two_step(2, 2)  # e1, e2, w_12
    assert good.weights is not None
    bad_weights = {i: w for i, w in good.weights.items()}
    bad_weights[2] = (5, 5)
    with pytest.raises(InputError):
        KaryAlgebra(2, 3, good.labels, good.brackets, bad_weights)


def test_from_brackets_normalizes():
    alg = KaryAlgebra.from_brackets(
        2, 3, list("abc"), [((1, 0), {2: 1})]
    )
    assert alg.brackets == {(0, 1): {2: -1}}
    with pytest.raises(InputError):
        KaryAlgebra.from_brackets(2, 3, list("abc"), [((1, 1), {2: 1})])


# -- Jacobi ----------------------------------------------------------------


def test_jacobi_holds_on_families():
    for alg in (
        heisenberg(2, 3),
        heisenberg(3, 2),
        acj(3, 2),
        free_two_step(3, 4),
        free_three_step_small(3),
        free_three_step_small(4),
        abelian(3, 4),
    ):
        assert check_jacobi(alg) == []


def test_jacobi_matches_exhaustive_oracle():
    f3 = free_three_step_small(3)
    assert jacobi_residuals_exhaustive(f3) == []
    assert check_jacobi(f3) == []


def test_jacobi_detects_violation():
    # [x1, x2, z] = x1 breaks the identity; the exhaustive oracle agrees
    mutant = mutate(heisenberg(3, 1), (0, 1, 3), {0: 1})
    violations = check_jacobi(mutant)
    assert violations
    assert jacobi_residuals_exhaustive(mutant)
    assert (0, 1, 2, 1, 3) in violations


def test_jacobi_quirk_x3_valued_mutant_is_consistent():
    # adding [x1, x2, z] = x3 to heisenberg(3,1) yields one of the
    # genuine 4-dim ternary algebras, so no violation is reported
    mutant = mutate(heisenberg(3, 1), (0, 1, 3), {2: 1})
    assert check_jacobi(mutant) == []
    assert jacobi_residuals_exhaustive(mutant) == []


# -- series, center, subspaces ---------------------------------------------


def test_lower_central_series_dims():
    assert [s.dim for s in lower_central_series(heisenberg(3, 1))] == [4, 1, 0]
    assert [s.dim for s in lower_central_series(free_three_step_small(3))] == [7, 4, 3, 0]
    assert [s.dim for s in lower_central_series(abelian(2, 5))] == [5, 0]
    assert is_nilpotent(acj(3, 2))


def test_series_strictly_decreasing_until_zero():
    for alg in (heisenberg(4, 2), acj(2, 3), free_two_step(2, 4), free_three_step_small(4)):
        dims = [s.dim for s in lower_central_series(alg)]
        assert all(a > b for a, b in zip(dims, dims[1:]))
        assert dims[-1] == 0


def test_center_dims():
    assert center(heisenberg(3, 2)).dim == 1
    assert center(acj(3, 2)).dim == 2
    assert center(free_two_step(3, 4)).dim == 4  # C(4,3)
    assert center(abelian(2, 3)).dim == 3


def test_center_contains_expected_vectors():
    a = acj(3, 2)
    z = center(a)
    for i in (5, 6):  # x3_1, x3_2
        vec = [0] * a.dim
        vec[i] = 1
        assert z.contains_vector(vec)


def test_two_step_families_commutator_inside_center():
    from karyhom.families import current_algebra

    for alg in (
        heisenberg(3, 2),
        acj(2, 2),
        free_two_step(3, 4),
        current_algebra(heisenberg(2, 2), 2),
    ):
        series = lower_central_series(alg)
        assert len(series) == 3  # [g, C2, 0]
        assert center(alg).contains(series[1])


def test_subspace_canonical_form():
    s1 = Subspace(2, [[1, 1], [0, 2]])
    s2 = Subspace(2, [[1, 0], [0, 1]])
    assert s1 == s2
    s3 = Subspace(3, [[2, 4, 0]])
    assert s3.dim == 1
    assert s3.contains_vector([1, 2, 0])
    assert not s3.contains_vector([1, 0, 0])
    assert Subspace.full(3).contains(s3)


# -- JSON interchange --------------------------------------------------------


def test_json_round_trip(tmp_path):
    for alg in (heisenberg(3, 2), free_two_step(2, 3)):
        path = tmp_path / "alg.json"
        dump_algebra(alg, path)
        back = load_algebra(path)
        assert back.structure_equal(alg)
        assert back.labels == alg.labels
        assert back.weights == alg.weights


def test_json_rational_coefficients_are_cleared():
    doc = {
        "arity": 2,
        "dim": 3,
        "labels": ["a", "b", "c"],
        "brackets": [{"args": [0, 1], "value": [["1/2", 2]]}],
    }
    alg = algebra_from_json_dict(doc)
    assert alg.brackets == {(0, 1): {2: 1}}

    doc2 = {
        "arity": 2,
        "dim": 4,
        "labels": list("abcd"),
        "brackets": [
            {"args": [0, 1], "value": [["1/2", 2]]},
            {"args": [0, 2], "value": [["1/3", 3], [1, 2]]},
        ],
    }
    alg2 = algebra_from_json_dict(doc2)
    # one global scaling by lcm(2, 3) keeps the bracket map well defined
    assert alg2.brackets == {(0, 1): {2: 3}, (0, 2): {3: 2, 2: 6}}


def test_json_load_errors():
    base = {
        "arity": 2,
        "dim": 3,
        "labels": ["a", "b", "c"],
        "brackets": [{"args": [1, 0], "value": [[1, 2]]}],
    }
    with pytest.raises(LoadError):
        algebra_from_json_dict(base)
    with pytest.raises(LoadError):
        algebra_from_json_dict(
            {**base, "brackets": [{"args": [0, 1], "value": [[0.5, 2]]}]}
        )
    with pytest.raises(LoadError):
        load_algebra(io.StringIO("not json"))


def test_json_dict_is_serializable_and_stable():
    import json

    alg = free_two_step(3, 3)
    doc = algebra_to_json_dict(alg)
    text1 = json.dumps(doc, sort_keys=True)
    text2 = json.dumps(algebra_to_json_dict(free_two_step(3, 3)), sort_keys=True)
    assert text1 == text2
