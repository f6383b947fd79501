import itertools

import numpy as np
import pytest

from modfunctor.core.errors import StructureError
from .factories import abelian_dims, fibonacci_dims, su2_level_dims, trivial_dims
from ..dim_table import check_flip_dim_consistency, dim_triple, DimTable, flip_dimensions


@pytest.mark.parametrize("factory", [
    trivial_dims, fibonacci_dims, lambda: abelian_dims(3), lambda: su2_level_dims(3)])
def test_unit_row(factory):
    dims = factory()
    ls = dims.label_set
    for mu, nu in itertools.product(ls, repeat=2):
        assert dim_triple(dims, ls.unit, mu, nu) == int(nu == ls.dual(mu))


def test_fibonacci_tau_cubed():
    assert dim_triple(fibonacci_dims(), "tau", "tau", "tau") == 1


@pytest.mark.parametrize("factory", [
    trivial_dims, fibonacci_dims, lambda: abelian_dims(4), lambda: su2_level_dims(4)])
def test_symmetries_hold(factory):
    dims = factory()
    assert dims.symmetry_violations() == []
    assert dims.dagger_violations() == []


@pytest.mark.parametrize("factory", [
    trivial_dims, fibonacci_dims, lambda: abelian_dims(5), lambda: su2_level_dims(3)])
def test_fusion_matrices(factory):
    family = factory().fusion_matrices()
    assert family.unit_is_identity()
    assert family.max_commutator() == 0


def test_fibonacci_fusion_matrix():
    family = fibonacci_dims().fusion_matrices()
    np.testing.assert_array_equal(family["tau"], [[0, 1], [1, 1]])


def test_abelian_fusion_matrix_is_a_permutation():
    family = abelian_dims(3).fusion_matrices()
    # N^1 maps μ to μ + 1
    np.testing.assert_array_equal(family["1"], [[0, 1, 0], [0, 0, 1], [1, 0, 0]])


def test_n_is_d_with_last_label_dualized():
    dims = abelian_dims(3)
    assert dims.n("1", "1", "2") == 1
    assert dims.dim("1", "1", "2") == 0


@pytest.mark.parametrize("factory", [
    trivial_dims, fibonacci_dims, lambda: abelian_dims(3), lambda: su2_level_dims(2)])
def test_flip_dimension_consistency_exhaustive(factory):
    dims = factory()
    for quad in itertools.product(dims.label_set, repeat=4):
        assert check_flip_dim_consistency(dims, *quad), quad


def test_fibonacci_all_tau_flip_has_dimension_two():
    assert flip_dimensions(fibonacci_dims(), "tau", "tau", "tau", "tau") == (2, 2)


def test_corrupted_table_fails_flip_consistency():
    good = fibonacci_dims()
    table = good.table.copy()
    # only the (τ,τ,0) ordering is doubled, so the two factorizations count it differently
    table[1, 1, 0] = 2
    corrupted = DimTable(good.label_set, table)
    assert flip_dimensions(corrupted, "tau", "tau", "0", "tau") == (2, 1)
    assert not check_flip_dim_consistency(corrupted, "tau", "tau", "0", "tau")
    assert check_flip_dim_consistency(good, "tau", "tau", "0", "tau")


def test_bad_shapes_are_rejected():
    ls = fibonacci_dims().label_set
    with pytest.raises(StructureError):
        DimTable(ls, np.zeros((2, 2)))
    with pytest.raises(StructureError):
        DimTable(ls, -np.ones((2, 2, 2)))


def test_broken_swap_symmetry_is_reported():
    good = abelian_dims(3)
    table = good.table.copy()
    table[1, 2, 0] = 0
    problems = DimTable(good.label_set, table).symmetry_violations()
    assert any("swap" in p for p in problems)
    assert any("cyclic" in p for p in problems)
