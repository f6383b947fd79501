"""Dimensions of modular-functor spaces by summing over labelings of a pants decomposition.

Every surface is cut into pairs of pants, discs and annuli. Gluing along a curve labeled μ on
one side pairs it with μ† on the other, and the dimension is the sum, over all labelings of the
cut curves, of the product of the pieces' dimensions.
"""
from typing import List, Sequence, Union

import numpy as np

from modfunctor.core.types import DecompositionTree
from .dim_table import DimTable


def small_sphere_dim(dt: DimTable, boundary: Sequence[str]) -> int:
    """Dimension for spheres with at most three punctures, straight from the axioms."""
    ls = dt.label_set
    boundary = [ls.check(x) for x in boundary]
    if len(boundary) == 0:
        return 1
    if len(boundary) == 1:
        return int(boundary[0] == ls.unit)
    if len(boundary) == 2:
        return int(boundary[1] == ls.dual(boundary[0]))
    if len(boundary) == 3:
        return dt.dim(*boundary)
    raise ValueError("small_sphere_dim handles at most three punctures")


def _dual_permutation(dt: DimTable) -> List[int]:
    ls = dt.label_set
    return [ls.index(ls.dual(x)) for x in ls]


def _handle_vector(dt: DimTable) -> np.ndarray:
    """w[y] = dim of a one-holed torus seen through a curve labeled y from outside, i.e. whose own
    boundary carries y†."""
    ls = dt.label_set
    dual = _dual_permutation(dt)
    table = dt.table
    one_holed = np.array([
        sum(table[ls.index(z), m, dual[m]] for m in range(len(ls))) for z in ls
    ])
    return one_holed[dual]


def _leg_vector(dt: DimTable, label: str) -> np.ndarray:
    vec = np.zeros(len(dt.label_set), dtype=np.int64)
    vec[dt.label_set.index(label)] = 1
    return vec


def _caterpillar(dt: DimTable, genus: int, boundary: Sequence[str]) -> int:
    """Spine of pants with one leg per handle (one-holed tori) followed by one leg per boundary
    label."""
    legs = [_handle_vector(dt)] * genus + [_leg_vector(dt, x) for x in boundary]
    dual = _dual_permutation(dt)
    unit = dt.label_set.index(dt.label_set.unit)
    table = dt.table

    if len(legs) == 1:
        return int(legs[0][unit])

    # acc[e]: dimension of the part glued so far with its open curve labeled e as seen from the
    # next piece
    acc = legs[0]
    for leg in legs[1:-1]:
        glued = np.einsum("e,y,eyz->z", acc, leg, table)
        acc = glued[dual]
    return int(np.dot(acc, legs[-1][dual]))


def _comb(dt: DimTable, genus: int, boundary: Sequence[str]) -> int:
    """Start from a disc, attach boundary punctures one pants at a time, then add each handle
    as two pants glued along a non-separating pair of curves, and cap off with a disc."""
    ls = dt.label_set
    dual = _dual_permutation(dt)
    unit = ls.index(ls.unit)
    table = dt.table

    acc = np.zeros(len(ls), dtype=np.int64)
    acc[unit] = 1
    for label in boundary:
        b = ls.index(label)
        acc = np.einsum("e,ez->z", acc, table[:, b, :])[dual]
    # handle: pants (e, μ, x) glued to pants (x†, μ†, z†)
    second = table[dual][:, dual, :][:, :, dual]
    for _ in range(genus):
        acc = np.einsum("e,emx,xmz->z", acc, table, second)
    return int(acc[unit])


def verlinde_dim(
        dt: DimTable,
        genus: int,
        boundary: Sequence[str]=(),
        tree: Union[DecompositionTree, str]=DecompositionTree.CATERPILLAR,
) -> int:
    """Dimension of the space attached to a genus ``genus`` surface with the given boundary labels.

    Parameters
    ----------
    dt : DimTable
        dimensions of the three-punctured spheres
    genus : int
        non-negative genus
    boundary : Sequence[str]
        labels of the marked points
    tree : DecompositionTree
        which pants decomposition to sum over; the result does not depend on it for a
        consistent dimension table

    Returns
    -------
    int :
        the dimension

    Examples
    --------
    The genus-two space of the Fibonacci-type theory::

        >>> verlinde_dim(fibonacci.dims, 2)
        5

    """
    if genus < 0:
        raise ValueError(f"genus must be non-negative, got {genus}")
    boundary = [dt.label_set.check(x) for x in boundary]
    if genus == 0 and len(boundary) <= 3:
        return small_sphere_dim(dt, boundary)
    tree = DecompositionTree(tree)
    if tree == DecompositionTree.COMB:
        return _comb(dt, genus, boundary)
    return _caterpillar(dt, genus, boundary)
