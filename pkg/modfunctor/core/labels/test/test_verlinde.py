import itertools

import pytest

from modfunctor.core.types import DecompositionTree
from .factories import abelian_dims, fibonacci_dims, su2_level_dims, trivial_dims
from ..verlinde import verlinde_dim


def test_fibonacci_genus_two():
    assert verlinde_dim(fibonacci_dims(), 2, []) == 5


def test_fibonacci_genus_two_by_enumeration():
    dims = fibonacci_dims()
    ls = dims.label_set
    expected = sum(
        dims.dim(a, b, c) * dims.dim(ls.dual(a), ls.dual(b), ls.dual(c))
        for a, b, c in itertools.product(ls, repeat=3))
    assert verlinde_dim(dims, 2) == expected


@pytest.mark.parametrize("factory", [
    trivial_dims, fibonacci_dims, lambda: abelian_dims(3), lambda: su2_level_dims(2)])
def test_torus_dimension_is_label_count(factory):
    dims = factory()
    assert verlinde_dim(dims, 1, []) == len(dims.label_set)


@pytest.mark.parametrize("factory", [fibonacci_dims, lambda: abelian_dims(3)])
def test_small_spheres(factory):
    dims = factory()
    ls = dims.label_set
    assert verlinde_dim(dims, 0, []) == 1
    for lam in ls:
        assert verlinde_dim(dims, 0, [lam]) == int(lam == ls.unit)
    for a, b in itertools.product(ls, repeat=2):
        assert verlinde_dim(dims, 0, [a, b]) == int(b == ls.dual(a))
    for a, b, c in itertools.product(ls, repeat=3):
        assert verlinde_dim(dims, 0, [a, b, c]) == dims.dim(a, b, c)


def test_abelian_dimensions_are_powers():
    # every torus space of an abelian theory with k labels has dimension k**genus
    dims = abelian_dims(3)
    for genus in range(4):
        assert verlinde_dim(dims, genus) == 3 ** genus


@pytest.mark.parametrize("factory", [
    fibonacci_dims, lambda: abelian_dims(3), lambda: su2_level_dims(2), lambda: su2_level_dims(3)])
def test_decomposition_independence(factory):
    dims = factory()
    ls = dims.label_set
    for genus in range(4):
        for n_boundary in range(3):
            for boundary in itertools.product(ls, repeat=n_boundary):
                caterpillar = verlinde_dim(dims, genus, boundary, DecompositionTree.CATERPILLAR)
                comb = verlinde_dim(dims, genus, boundary, DecompositionTree.COMB)
                assert caterpillar == comb, (genus, boundary)


def test_four_punctured_sphere_matches_flip_dimension():
    dims = fibonacci_dims()
    assert verlinde_dim(dims, 0, ["tau"] * 4) == 2
    assert verlinde_dim(dims, 0, ["tau"] * 4, "comb") == 2


def test_negative_genus_is_rejected():
    with pytest.raises(ValueError):
        verlinde_dim(fibonacci_dims(), -1)
