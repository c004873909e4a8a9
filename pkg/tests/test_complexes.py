import pytest

from zigzagtwist.algebra.element import AlgebraElement
from zigzagtwist.algebra.paths import BasisPath
from zigzagtwist.core.complexes import (
    ChainMap,
    Complex,
    InvalidComplexError,
    Summand,
    compose,
    cone,
    direct_sum,
    direct_sum_all,
    grothendieck_class,
    identity_map,
    projective,
    projective_sum,
    renumbered,
    shift,
    validate,
    validate_chain_map,
    zero_complex,
)
from zigzagtwist.core.minimize import minimize


def e(name: str, coeff: int = 1) -> AlgebraElement:
    return AlgebraElement.of(BasisPath.parse(name), coeff)


def two_term(grading) -> Complex:
    """P2 -> P1 + P1<1> in the tilde orientation."""
    return Complex.build(
        2,
        grading,
        [Summand(0, 2, 0, 0), Summand(1, 1, 0, 1), Summand(1, 1, 1, 2)],
        [(0, 1, e("x*1_2")), (0, 2, e("y*1_2"))],
    )


def test_valid_complex(tilde):
    validate(two_term(tilde))


def test_entry_of_wrong_degree(tilde):
    bad = Complex.build(2, tilde, [Summand(0, 1, 0, 0), Summand(1, 2, 1, 1)], [(0, 1, e("y1_2"))])
    with pytest.raises(InvalidComplexError, match="degree"):
        validate(bad)


def test_entry_must_raise_homological_degree(tilde):
    bad = Complex.build(2, tilde, [Summand(0, 1, 0, 0), Summand(2, 2, 1, 1)], [(0, 1, e("x1_2"))])
    with pytest.raises(InvalidComplexError):
        validate(bad)


def test_entry_endpoints(tilde):
    bad = Complex.build(2, tilde, [Summand(0, 1, 0, 0), Summand(1, 2, 1, 1)], [(0, 1, e("x*1_2"))])
    with pytest.raises(InvalidComplexError):
        validate(bad)


def test_square_zero(tilde):
    bad = Complex.build(
        2,
        tilde,
        [Summand(0, 1, 0, 0), Summand(1, 2, 1, 1), Summand(2, 1, 1, 2)],
        [(0, 1, e("x1_2")), (1, 2, e("x*1_2"))],
    )
    with pytest.raises(InvalidComplexError, match="d\\^2"):
        validate(bad)


def test_duplicate_uids(tilde):
    bad = Complex(2, tilde, (Summand(0, 1, 0, 0), Summand(0, 2, 0, 0)))
    with pytest.raises(InvalidComplexError, match="Duplicate"):
        validate(bad)


def test_invalid_complex_error_is_a_value_error():
    assert issubclass(InvalidComplexError, ValueError)


def test_projective(tilde):
    p = projective(2, 1, -1, 3, tilde)
    assert p.summands == (Summand(-1, 2, 1, 0),)
    assert str(p) == "[-1] P2<1>"
    with pytest.raises(ValueError):
        projective(4, 0, 0, 3, tilde)


def test_projective_sum(vec):
    g = projective_sum(3, vec)
    assert [s.vertex for s in g.summands] == [1, 2, 3]
    assert g.degrees == (0,)


def test_shift(tilde):
    c = two_term(tilde)
    shifted = shift(c, 1, 2)
    assert shifted.support == (-1, 0)
    assert shifted.shift_range == (2, 3)
    assert shifted.entry(0, 1) == -e("x*1_2")
    validate(shifted)
    assert shift(shifted, -1, -2) == c


def test_str(tilde):
    assert str(two_term(tilde)) == "[0] P2 -> [1] P1 + P1<1>"
    assert str(zero_complex(2, tilde)) == "0"


def test_direct_sum(tilde):
    c = two_term(tilde)
    total = direct_sum(c, projective(1, 0, 0, 2, tilde))
    assert len(total) == 4
    validate(total)
    assert total.signature() == tuple(sorted(c.signature() + ((0, 1, 0),)))


def test_direct_sum_needs_matching_gradings(tilde, vec):
    with pytest.raises(ValueError, match="Grading mismatch"):
        direct_sum(projective(1, 0, 0, 2, tilde), projective(1, 0, 0, 2, vec))


def test_direct_sum_all_of_nothing(tilde):
    assert direct_sum_all(2, tilde, []).is_zero()


def test_renumbered(tilde):
    c, mapping = renumbered(two_term(tilde), start=10)
    assert sorted(mapping.values()) == [10, 11, 12]
    assert [s.uid for s in c.summands] == [10, 11, 12]
    validate(c)


def test_grothendieck_class(tilde):
    c = two_term(tilde)
    assert grothendieck_class(c) == {(1, 0): -1, (1, 1): -1, (2, 0): 1}
    doubled = direct_sum(c, c)
    assert grothendieck_class(doubled) == {(1, 0): -2, (1, 1): -2, (2, 0): 2}


def test_cone_of_identity_is_contractible(tilde):
    c = two_term(tilde)
    mapping_cone = cone(identity_map(c))
    validate(mapping_cone)
    assert len(mapping_cone) == 2 * len(c)
    assert grothendieck_class(mapping_cone) == {}
    assert minimize(mapping_cone).is_zero()


def test_compose_identities(tilde):
    c = two_term(tilde)
    ident = identity_map(c)
    validate_chain_map(ident)
    assert compose(ident, ident).matrix == ident.matrix


def test_chain_map_must_commute(tilde):
    c = two_term(tilde)
    # identity on P2 only does not commute with the differential
    half = ChainMap.from_matrix(c, c, {0: {0: e("e2")}})
    with pytest.raises(InvalidComplexError, match="commute"):
        validate_chain_map(half)
