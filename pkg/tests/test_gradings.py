import pytest

from zigzagtwist.algebra.paths import PathKind, basis, dual_partner, edge, idem, loop, path_product
from zigzagtwist.gradings.base import SliceFlavor
from zigzagtwist.gradings.factory import create_grading, grading_from_document

X, Y, XS, YS = (edge(kind, 1, 2) for kind in (PathKind.X, PathKind.Y, PathKind.XSTAR, PathKind.YSTAR))


def test_tilde_degrees(tilde):
    assert [tilde.degree(p) for p in (X, Y, XS, YS)] == [1, 0, 0, 1]
    assert tilde.degree(loop(1)) == 1
    assert tilde.degree(idem(1)) == 0
    assert tilde.flavor is SliceFlavor.BARIC


def test_vec_degrees(vec):
    assert [vec.degree(p) for p in (X, Y, XS, YS)] == [1, 1, 0, 0]
    assert vec.loop_degree == 1


def test_path_length_degrees(path_grading):
    assert [path_grading.degree(p) for p in (X, Y, XS, YS)] == [1, 1, 1, 1]
    assert path_grading.degree(loop(2)) == 2
    assert path_grading.flavor is SliceFlavor.T


@pytest.mark.parametrize("mode", ["path", "tilde", "vec"])
def test_dual_partners_add_up_to_the_loop(mode):
    grading = create_grading(mode)
    for path in basis(4):
        assert grading.degree(path) + grading.degree(dual_partner(path)) == grading.loop_degree


@pytest.mark.parametrize("mode", ["path", "tilde", "vec"])
def test_multiplication_is_homogeneous(mode):
    grading = create_grading(mode)
    for a in basis(3):
        for b in basis(3):
            ab = path_product(a, b)
            if ab is not None:
                assert grading.degree(ab) == grading.degree(a) + grading.degree(b)


def test_slice_index(tilde, path_grading):
    assert tilde.slice_index(3, 1) == 3
    assert path_grading.slice_index(3, 1) == 2


def test_custom_orientation():
    grading = create_grading("custom", [{"edge": "x1_2", "up": False}])
    assert grading.degree(X) == 0
    assert grading.degree(XS) == 1
    assert grading.degree(Y) == 1
    assert grading_from_document(grading.describe()) == grading


def test_custom_orientation_rejects_starred_edges():
    with pytest.raises(ValueError):
        create_grading("custom", [{"edge": "x*1_2", "up": True}])


def test_unknown_mode():
    with pytest.raises(ValueError, match="Unknown grading mode"):
        create_grading("bogus")


@pytest.mark.parametrize("mode", ["path", "tilde", "vec"])
def test_describe_round_trip(mode):
    grading = create_grading(mode)
    assert grading_from_document(grading.describe()) == grading
