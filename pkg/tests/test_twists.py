import pytest
from hypothesis import given, strategies as st

from zigzagtwist.algebra.element import AlgebraElement
from zigzagtwist.algebra.paths import BasisPath
from zigzagtwist.core.complexes import Summand, projective, projective_sum, validate, zero_complex
from zigzagtwist.core.homotopy import is_isomorphic
from zigzagtwist.core.twists import psi, psi_generator, psi_projective, reflection_complex, sigma
from zigzagtwist.freegroup.words import Word, reduce
from zigzagtwist.gradings.factory import create_grading

modes = st.sampled_from(["path", "tilde", "vec"])
words3 = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=3).map(lambda ls: Word(tuple(ls)))


def test_twist_of_its_own_projective(tilde, path_grading):
    assert sigma(1, 1, projective(1, 0, 0, 2, tilde)).summands == (Summand(1, 1, 1, 0),)
    assert sigma(1, -1, projective(1, 0, 0, 2, tilde)).summands == (Summand(-1, 1, -1, 0),)
    assert sigma(2, 1, projective(2, 0, 0, 2, path_grading)).summands == (Summand(1, 2, 2, 0),)


def test_positive_twist_of_a_neighbour(tilde):
    result = sigma(1, 1, projective(2, 0, 0, 2, tilde))
    validate(result)
    assert result.signature() == ((0, 2, 0), (1, 1, 0), (1, 1, 1))
    entries = {result.by_uid[t].shift: elt for _, t, elt in result.differential}
    assert entries[0] == AlgebraElement.of(BasisPath.parse("x*1_2"))
    assert entries[1] == AlgebraElement.of(BasisPath.parse("y*1_2"))


def test_negative_twist_of_a_neighbour(tilde):
    result = sigma(1, -1, projective(2, 0, 0, 2, tilde))
    validate(result)
    assert result.signature() == ((-1, 1, -1), (-1, 1, 0), (0, 2, 0))


def test_twist_of_the_zero_complex(tilde):
    assert sigma(1, 1, zero_complex(2, tilde)).is_zero()


def test_sigma_arguments(tilde):
    p = projective(1, 0, 0, 2, tilde)
    with pytest.raises(ValueError):
        sigma(3, 1, p)
    with pytest.raises(ValueError):
        sigma(1, 2, p)
    with pytest.raises(ValueError):
        psi(Word.of(3), p)


def test_rightmost_letter_acts_first(tilde):
    p = projective(2, 0, 0, 2, tilde)
    assert psi(Word.of(1, 2), p) == sigma(1, 1, sigma(2, 1, p))


@given(mode=modes, i=st.integers(1, 3), j=st.integers(1, 3), sign=st.sampled_from([1, -1]))
def test_inverse_twists_cancel(mode, i, j, sign):
    grading = create_grading(mode)
    p = projective(j, 0, 0, 3, grading)
    assert sigma(i, -sign, sigma(i, sign, p)).signature() == ((0, j, 0),)


@given(mode=modes, w=words3, j=st.integers(1, 3))
def test_psi_projective_matches_psi(mode, w, j):
    grading = create_grading(mode)
    expected = psi(w, projective(j, 0, 0, 3, grading))
    assert is_isomorphic(psi_projective(w, j, 3, grading), expected)


@given(mode=modes, w=words3)
def test_twists_only_depend_on_the_reduced_word(mode, w):
    grading = create_grading(mode)
    assert is_isomorphic(psi_generator(w, 3, grading), psi_generator(reduce(w), 3, grading))


def test_nontrivial_words_move_the_generator(tilde):
    generator = projective_sum(2, tilde)
    for w in (Word.of(1), Word.of(2, -1), Word.of(1, 2, -1)):
        assert not is_isomorphic(psi_generator(w, 2, tilde), generator)


def test_reflection_complexes(vec):
    assert reflection_complex(Word.of(2), 2, vec).signature() == ((0, 2, 0),)
    conjugated = reflection_complex(Word.of(1, 2, -1), 2, vec)
    assert conjugated.signature() == ((0, 2, 0), (1, 1, 0), (1, 1, 0))
    with pytest.raises(ValueError):
        reflection_complex(Word.of(1, 2), 2, vec)


def test_reflection_complex_sits_in_slice_zero(tilde):
    c = reflection_complex(Word.of(-1, 2, 1), 2, tilde)
    assert min(s.shift for s in c.summands) == 0
