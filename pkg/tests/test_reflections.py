import pytest
from hypothesis import given, strategies as st

from zigzagtwist.freegroup.reflections import (
    apply_braid,
    bounded_reflections,
    braid_moves,
    braid_orbit,
    conjugate,
    enumerate_red_gamma,
    hurwitz,
    is_factorization,
    is_reflection,
    reflection_parts,
    standard_tuple,
)
from zigzagtwist.freegroup.words import Word, gamma, product

braids3 = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=5).map(tuple)


def test_is_reflection():
    assert is_reflection(Word.of(1))
    assert is_reflection(Word.of(1, 2, -1))
    assert is_reflection(Word.of(2, -1, 1, 3, -2))
    assert not is_reflection(Word.of(-1))
    assert not is_reflection(Word.of(1, 2))
    assert not is_reflection(Word())


def test_reflection_parts():
    assert reflection_parts(Word.of(-2, 1, 3, -1, 2)) == (Word.of(-2, 1), 3)
    assert conjugate(Word.of(-2, 1), 3) == Word.of(-2, 1, 3, -1, 2)
    with pytest.raises(ValueError):
        reflection_parts(Word.of(1, 1))


def test_hurwitz_moves():
    start = standard_tuple(2)
    assert hurwitz(1, start) == (Word.of(1, 2, -1), Word.of(1))
    assert hurwitz(-1, start) == (Word.of(2), Word.of(-2, 1, 2))
    with pytest.raises(ValueError):
        hurwitz(2, start)
    with pytest.raises(ValueError):
        hurwitz(0, start)


@given(braids3)
def test_hurwitz_action_preserves_factorizations(braid):
    factors = apply_braid(braid, standard_tuple(3))
    assert is_factorization(factors, 3)
    assert product(factors) == gamma(3)
    inverse = tuple(-m for m in reversed(braid))
    assert apply_braid(inverse, factors) == standard_tuple(3)


def test_braid_moves():
    assert braid_moves(3) == [1, -1, 2, -2]
    assert braid_moves(1) == []


@pytest.mark.parametrize("n,depth", [(2, 1), (2, 3), (3, 2)])
def test_braid_orbit_size(n, depth):
    m = 2 * (n - 1)
    expected = 1 + sum(m * (m - 1) ** (k - 1) for k in range(1, depth + 1))
    orbit = braid_orbit(n, depth)
    assert len(orbit) == expected
    assert orbit[0] == ((), standard_tuple(n))


def test_red_gamma_enumeration():
    tuples = enumerate_red_gamma(2, 3)
    assert tuples == [
        (Word.of(1), Word.of(2)),
        (Word.of(1, 2, -1), Word.of(1)),
        (Word.of(2), Word.of(-2, 1, 2)),
    ]
    assert all(is_factorization(t, 2) for t in tuples)
    assert len(enumerate_red_gamma(2, 1)) == 1


def test_bounded_reflections():
    assert bounded_reflections(2, 1) == [Word.of(1), Word.of(2)]
    found = bounded_reflections(2, 3)
    assert len(found) == 6
    assert found[2:] == [Word.of(-2, 1, 2), Word.of(-1, 2, 1), Word.of(1, 2, -1), Word.of(2, 1, -2)]
    assert all(is_reflection(t) for t in bounded_reflections(3, 5))
