import numpy as np
import pytest

from modfunctor.core.errors import RelationError, ShapeError, StructureError
from modfunctor.core.test.factories import ALL_TAU, fibonacci_theory, trivial_theory

GOLDEN_RATIO = (1 + np.sqrt(5)) / 2


def test_e_scalar_of_fibonacci_is_the_golden_ratio():
    bd = fibonacci_theory()
    assert np.isclose(bd.e_scalar("tau"), GOLDEN_RATIO, atol=1e-12)
    assert bd.e_scalar("0") == 1


def test_e_scalar_rejects_vanishing_block():
    bd = fibonacci_theory()
    broken = bd.with_f_block(("tau", "tau", "tau", "tau", "0", "0"), np.zeros((1, 1, 1, 1)))
    with pytest.raises(RelationError, match="vanishing E"):
        broken.e_scalar("tau")


def test_zero_twist_is_a_structure_error():
    bd = fibonacci_theory()
    with pytest.raises(StructureError, match="zero twist"):
        bd.with_twists({"0": 1, "tau": 0})


def test_wrong_f_block_shape_names_the_quad():
    bd = fibonacci_theory()
    with pytest.raises(ShapeError, match="expected \\(1, 1, 1, 1\\)"):
        bd.with_f_block(ALL_TAU, np.ones((2, 1, 1, 1)))


def test_f_block_of_zero_dimensional_space_is_empty():
    bd = fibonacci_theory()
    block = bd.f_block("0", "0", "tau", "0", "0", "0")
    assert block.size == 0


def test_twisted_f_block_of_trivial_theory():
    bd = trivial_theory()
    twisted = bd.twisted_f_block(*(["0"] * 6))
    assert twisted.shape == (1, 1, 1, 1)
    assert twisted[0, 0, 0, 0] == 1


def test_assembled_f_is_invertible_for_fibonacci():
    bd = fibonacci_theory()
    assembled = bd.assembled_f("tau", "tau", "tau", "tau")
    assert assembled.shape == (2, 2)
    assert np.linalg.cond(assembled) < 10


def test_r_cube_scalars_in_standard_gauge():
    bd = fibonacci_theory()
    scalars = bd.r_cube_scalars()
    assert set(scalars) == set(bd.dims.triples())
    assert all(np.isclose(value, 1) for value in scalars.values())


def test_arrays_are_read_only():
    bd = fibonacci_theory()
    with pytest.raises(ValueError):
        bd.f_block(*ALL_TAU)[0, 0, 0, 0] = 2
