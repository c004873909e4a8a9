from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zigzagtwist.algebra.element import AlgebraElement, multiply
from zigzagtwist.algebra.paths import (
    BasisPath,
    PathKind,
    basis,
    dual_partner,
    edge,
    hom_basis,
    idem,
    loop,
    path_product,
)

paths3 = st.sampled_from(basis(3))
elements3 = st.lists(
    st.tuples(paths3, st.integers(min_value=-3, max_value=3)), max_size=4
).map(AlgebraElement.from_terms)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_basis_size(n):
    assert len(basis(n)) == 2 * n * n
    assert len(set(basis(n))) == 2 * n * n


def test_basis_rejects_rank_zero():
    with pytest.raises(ValueError):
        basis(0)


def test_edge_indices_must_increase():
    with pytest.raises(ValueError):
        BasisPath(PathKind.X, 2, 1)
    with pytest.raises(ValueError):
        BasisPath(PathKind.LOOP, 1, 2)


def test_path_names_parse_back():
    for path in basis(3):
        assert BasisPath.parse(path.name) == path
    assert BasisPath.parse("x*1_3") == edge(PathKind.XSTAR, 1, 3)
    with pytest.raises(ValueError):
        BasisPath.parse("w1_2")


def test_dual_pairs_multiply_to_the_loop_at_the_start():
    x, xs = edge(PathKind.X, 1, 2), edge(PathKind.XSTAR, 1, 2)
    assert path_product(x, xs) == loop(1)
    assert path_product(xs, x) == loop(2)
    y, ys = edge(PathKind.Y, 1, 2), edge(PathKind.YSTAR, 1, 2)
    assert path_product(ys, y) == loop(2)


def test_other_length_two_products_vanish():
    assert path_product(edge(PathKind.X, 1, 2), edge(PathKind.YSTAR, 1, 2)) is None
    assert path_product(edge(PathKind.X, 1, 2), edge(PathKind.X, 2, 3)) is None
    assert path_product(loop(1), edge(PathKind.X, 1, 2)) is None
    assert path_product(edge(PathKind.X, 1, 2), idem(1)) is None
    assert path_product(idem(1), edge(PathKind.X, 1, 2)) == edge(PathKind.X, 1, 2)


def test_hom_basis():
    assert hom_basis(1, 1) == (idem(1), loop(1))
    assert hom_basis(1, 2) == (edge(PathKind.X, 1, 2), edge(PathKind.Y, 1, 2))
    assert hom_basis(3, 1) == (edge(PathKind.XSTAR, 1, 3), edge(PathKind.YSTAR, 1, 3))
    with pytest.raises(ValueError):
        hom_basis(1, 4, n=3)


def test_dual_partner_is_an_involution():
    for path in basis(3):
        assert dual_partner(dual_partner(path)) == path
    assert dual_partner(idem(2)) == loop(2)


@given(elements3, elements3, elements3)
def test_multiplication_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(elements3)
def test_unit(a):
    unit = AlgebraElement.unit(3)
    assert unit * a == a
    assert a * unit == a


@given(elements3, elements3)
def test_addition_cancels(a, b):
    assert (a + b) - b == a
    assert (a - a).is_zero()


def test_zero_coefficients_are_dropped():
    elt = AlgebraElement.from_terms([(loop(1), 2), (loop(1), -2)])
    assert elt == AlgebraElement.zero()
    assert not elt


def test_vertex_inverse():
    elt = AlgebraElement.from_terms([(idem(1), 2), (loop(1), 3)])
    inverse = elt.vertex_inverse()
    assert inverse.coefficient(idem(1)) == Fraction(1, 2)
    assert inverse.coefficient(loop(1)) == Fraction(-3, 4)
    assert elt * inverse == AlgebraElement.of(idem(1))
    with pytest.raises(ValueError):
        AlgebraElement.of(loop(1)).vertex_inverse()


def test_endpoints():
    mixed = AlgebraElement.of(edge(PathKind.X, 1, 2)) + AlgebraElement.of(edge(PathKind.Y, 1, 2))
    assert mixed.endpoints() == (1, 2)
    impure = AlgebraElement.of(idem(1)) + AlgebraElement.of(idem(2))
    assert impure.endpoints() is None


def test_str():
    elt = AlgebraElement.from_terms([(idem(1), 1), (loop(1), Fraction(-3, 2))])
    assert str(elt) == "e1 - 3/2*z1"
    assert str(AlgebraElement.zero()) == "0"


def test_multiply_rejects_elements_beyond_the_rank():
    a = AlgebraElement.of(edge(PathKind.X, 1, 3))
    b = AlgebraElement.of(edge(PathKind.XSTAR, 1, 3))
    assert multiply(a, b, 3) == AlgebraElement.of(loop(1))
    assert a.max_vertex() == 3
    with pytest.raises(ValueError):
        multiply(a, b, 2)
    with pytest.raises(ValueError):
        multiply(AlgebraElement.of(idem(1)), b, 2)
