import pytest
from hypothesis import given, strategies as st

from zigzagtwist.freegroup.words import (
    Word,
    all_reduced_words,
    counts,
    cyclic_reduce,
    exponent_sum,
    gamma,
    is_reduced,
    letter_histogram,
    product,
    reduce,
)

words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=8).map(lambda ls: Word(tuple(ls)))


def test_parse():
    assert Word.parse("s1 s2^-1 s3") == Word.of(1, -2, 3)
    assert Word.parse("s1*s2") == Word.of(1, 2)
    assert Word.parse("s2^1") == Word.of(2)
    for identity in ("", "1", "e", "  "):
        assert Word.parse(identity) == Word()


@pytest.mark.parametrize("text", ["s0", "t1", "s1^2", "s1^-2", "s1 s", "s-1"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        Word.parse(text)


def test_letters_must_be_nonzero():
    with pytest.raises(ValueError):
        Word.of(1, 0)


def test_format():
    assert Word.of(1, -2).format() == "s1 s2^-1"
    assert str(Word()) == "1"


@given(words)
def test_format_parses_back(w):
    assert Word.parse(w.format()) == w


@given(words)
def test_reduce(w):
    r = reduce(w)
    assert is_reduced(r)
    assert reduce(r) == r
    assert exponent_sum(r) == exponent_sum(w)
    assert len(r) <= len(w)


@given(words, words)
def test_group_laws(a, b):
    assert a * a.inverse() == Word()
    assert (a * b).inverse() == b.inverse() * a.inverse()
    assert exponent_sum(a * b) == exponent_sum(a) + exponent_sum(b)


@given(words)
def test_cyclic_reduce(w):
    g, core = cyclic_reduce(w)
    assert g.concat(core).concat(g.inverse()) == reduce(w)
    if len(core) >= 2:
        assert core.letters[0] != -core.letters[-1]


def test_counts_and_histogram():
    w = Word.of(1, 2, -2, -1, -3, 2, 2)
    assert counts(w) == (2, 1)
    assert letter_histogram(w) == {-3: 1, 2: 2}


def test_gamma():
    assert gamma(3) == Word.of(1, 2, 3)
    assert product([Word.of(1), Word.of(2), Word.of(-1)]) == Word.of(1, 2, -1)
    with pytest.raises(ValueError):
        gamma(0)


@pytest.mark.parametrize("n,length", [(1, 3), (2, 2), (2, 4), (3, 2)])
def test_all_reduced_words(n, length):
    found = list(all_reduced_words(n, length))
    expected = 1 + sum(2 * n * (2 * n - 1) ** (k - 1) for k in range(1, length + 1))
    assert len(found) == expected
    assert len(set(found)) == expected
    assert all(is_reduced(w) for w in found)
    assert [len(w) for w in found] == sorted(len(w) for w in found)
