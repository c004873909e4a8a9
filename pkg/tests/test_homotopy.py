import pytest

from zigzagtwist.core.complexes import compose, cone, identity_map, projective, shift, zero_complex
from zigzagtwist.core.homotopy import (
    HomTable,
    aggregate_hom,
    hom_dim,
    hom_space,
    hom_table,
    is_isomorphic,
    is_isomorphic_up_to_shift,
    is_null_homotopic,
    isomorphism,
    shift_box,
)
from zigzagtwist.core.linalg import nonsingular_point
from zigzagtwist.core.twists import sigma


def P(i, grading, k=0, d=0, rank=2):
    return projective(i, k, d, rank, grading)


def test_endomorphisms_of_a_projective(tilde):
    assert hom_table(P(1, tilde), P(1, tilde)).dims == {(0, 0): 1, (0, 1): 1}


def test_homs_between_projectives(tilde, vec):
    assert hom_table(P(1, tilde), P(2, tilde)).dims == {(0, 0): 1, (0, 1): 1}
    assert hom_table(P(1, vec), P(2, vec)).dims == {(0, 1): 2}
    assert hom_table(P(2, vec), P(1, vec)).dims == {(0, 0): 2}


def test_hom_into_a_shift(tilde):
    assert hom_dim(P(1, tilde), P(1, tilde), hom=1) == 0
    assert hom_dim(P(1, tilde), P(1, tilde, d=1), hom=1) == 1


def test_hom_space_basis(vec):
    space = hom_space(P(1, vec), P(2, vec), 0, 1)
    assert space.dimension == 2
    assert len(space.basis) == 2
    assert all(f.int_offset == 1 for f in space.basis)


def test_twists_preserve_hom_tables(tilde):
    for i in (1, 2):
        for sign in (1, -1):
            left = sigma(i, sign, P(1, tilde))
            right = sigma(i, sign, P(2, tilde))
            assert hom_table(left, right) == hom_table(P(1, tilde), P(2, tilde))
            assert hom_table(right, right).dims == {(0, 0): 1, (0, 1): 1}


def test_aggregate_hom(tilde):
    assert aggregate_hom(P(1, tilde), P(2, tilde), 0) == 1
    assert aggregate_hom(P(1, tilde), P(2, tilde), 2) == 0


def test_shift_box_of_zero(tilde):
    homs, internals = shift_box(zero_complex(2, tilde), P(1, tilde))
    assert len(homs) == 0 and len(internals) == 0


def test_isomorphism_certificate(tilde):
    x = sigma(1, 1, P(2, tilde))
    y = sigma(1, 1, sigma(2, 1, sigma(2, -1, P(2, tilde))))
    pair = isomorphism(x, y)
    assert pair is not None
    f, g = pair
    assert compose(f, g).matrix == identity_map(f.source).matrix
    assert compose(g, f).matrix == identity_map(f.target).matrix


def test_isomorphism_is_deterministic(vec):
    x = sigma(2, -1, sigma(1, 1, P(2, vec)))
    first, second = isomorphism(x, x), isomorphism(x, x)
    assert first is not None
    assert first[0].matrix == second[0].matrix
    assert compose(first[0], first[1]).matrix == identity_map(first[0].source).matrix
    assert isomorphism(P(1, vec), P(1, vec, k=1)) is None


def test_nonsingular_point():
    swap = [[{0: 1}, {1: 1}], [{1: 1}, {0: 1}]]
    assert nonsingular_point([swap], 2) == [0, 1]
    assert nonsingular_point([[[{0: 1}, {0: 1}], [{0: 1}, {0: 1}]]], 1) is None
    assert nonsingular_point([[[{0: 1}]], [[{1: 2}]]], 2) == [1, 1]
    assert nonsingular_point([], 0) == []


def test_non_isomorphic(tilde):
    assert not is_isomorphic(P(1, tilde), P(2, tilde))
    assert not is_isomorphic(P(1, tilde), P(1, tilde, k=1))
    assert not is_isomorphic(P(1, tilde), P(1, tilde, d=1))
    assert is_isomorphic_up_to_shift(P(1, tilde), P(1, tilde, d=3))
    assert not is_isomorphic_up_to_shift(P(1, tilde), P(1, tilde, k=1))


def test_zero_complexes_are_isomorphic(tilde):
    assert is_isomorphic(zero_complex(2, tilde), zero_complex(2, tilde))
    assert not is_isomorphic_up_to_shift(zero_complex(2, tilde), P(1, tilde))


def test_null_homotopic(tilde):
    contractible = cone(identity_map(sigma(1, 1, P(2, tilde))))
    assert is_null_homotopic(identity_map(contractible))
    assert not is_null_homotopic(identity_map(P(1, tilde)))


def test_hom_table_rendering(tilde):
    table = hom_table(P(1, tilde), P(2, tilde))
    frame = table.to_frame()
    assert list(frame.index) == [0]
    assert list(frame.columns) == [0, 1]
    assert table.to_records() == [
        {"hom": 0, "internal": 0, "dim": 1},
        {"hom": 0, "internal": 1, "dim": 1},
    ]
    assert table.total() == 2
    assert table.at_internal(1) == 1
    assert str(HomTable()) == "0"


def test_mismatched_ranks(tilde):
    with pytest.raises(ValueError):
        hom_table(P(1, tilde, rank=2), P(1, tilde, rank=3))
