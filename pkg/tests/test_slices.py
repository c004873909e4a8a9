import pytest

from zigzagtwist.core.complexes import projective, shift, zero_complex
from zigzagtwist.core.slices import baric_slices, in_X_minus, in_X_plus, in_X_w, phi, slices, t_slices
from zigzagtwist.core.twists import psi_projective, reflection_complex, sigma
from zigzagtwist.freegroup.bessis import UnknownWithinBound
from zigzagtwist.freegroup.words import Word, gamma
from zigzagtwist.metrics.dual import dual_witness


def P(i, grading, rank=2):
    return projective(i, 0, 0, rank, grading)


def test_baric_slices_of_a_twist(tilde):
    decomposition = baric_slices(sigma(1, 1, P(2, tilde)))
    assert decomposition.indices == (0, 1)
    assert decomposition.phi == (0, 1)
    bottom, top = decomposition.get(0), decomposition.get(1)
    assert sorted(s.vertex for s in bottom.summands) == [1, 2]
    assert len(bottom.differential) == 1
    assert [s.vertex for s in top.summands] == [1]
    assert decomposition.get(5).is_zero()
    assert decomposition.bottom() == bottom
    assert decomposition.top() == top


def test_slices_partition_the_minimal_complex(tilde):
    y = psi_projective(Word.of(1, -2, 1), 2, 2, tilde)
    decomposition = slices(y)
    parts = sorted(s.key()[:3] for _, part in decomposition.slices for s in part.summands)
    assert parts == sorted(s.key()[:3] for s in decomposition.source.summands)


def test_phi(tilde, path_grading):
    assert phi(sigma(1, 1, P(2, tilde))) == (0, 1)
    assert phi(sigma(1, 1, P(1, tilde))) == (1, 1)
    assert phi(sigma(1, -1, P(2, tilde))) == (-1, 0)
    assert phi(sigma(1, 1, P(1, path_grading))) == (1, 1)
    assert phi(sigma(1, 1, P(2, path_grading))) == (0, 0)
    assert phi(zero_complex(2, tilde)) is None


def test_slicing_must_match_the_grading(tilde, path_grading):
    with pytest.raises(ValueError):
        t_slices(P(1, tilde))
    with pytest.raises(ValueError):
        baric_slices(P(1, path_grading))


def test_ping_pong_sets(tilde):
    assert in_X_plus(sigma(1, 1, P(2, tilde)), 1)
    assert not in_X_plus(sigma(1, 1, P(2, tilde)), 2)
    assert not in_X_plus(P(2, tilde), 1)
    assert in_X_minus(sigma(1, -1, P(2, tilde)), 1)
    assert not in_X_minus(sigma(1, 1, P(2, tilde)), 1)


def test_ping_pong_needs_a_nonzero_complex(tilde):
    with pytest.raises(ValueError):
        in_X_plus(zero_complex(2, tilde), 1)


def test_dual_ping_pong(vec):
    simple_reflections = [Word.of(1), Word.of(2), Word.of(1, 2, -1)]
    witness = shift(projective(1, 0, 0, 2, vec), 0, 1)
    assert in_X_w(witness, gamma(2), simple_reflections, 3)
    assert not in_X_w(shift(projective(1, 0, 0, 2, vec), 0, -1), gamma(2), simple_reflections, 3)


def test_dual_witness_with_a_long_complement(vec):
    simple_reflections = [Word.of(1), Word.of(2), Word.of(1, 2, -1)]
    w = Word.of(1, 2, -1)
    witness = dual_witness(w, 2, 3)
    assert not witness.is_zero()
    assert witness == reflection_complex(Word.of(1, 2, 1, -2, -1), 2, vec)
    assert in_X_w(witness, w, simple_reflections, 3)


def test_dual_witness_edges(vec):
    assert dual_witness(gamma(2), 2, 3) == shift(reflection_complex(Word.of(1), 2, vec), 0, 1)
    assert dual_witness(Word.of(2), 2, 3) == reflection_complex(Word.of(1), 2, vec)
    with pytest.raises(UnknownWithinBound):
        dual_witness(Word(), 2, 3)
    with pytest.raises(ValueError):
        dual_witness(Word.of(1, 1), 2, 3)


def test_dual_ping_pong_rejects_non_reflections(vec):
    with pytest.raises(ValueError):
        in_X_w(projective(1, 0, 0, 2, vec), gamma(2), [Word.of(1, 2)], 3)
