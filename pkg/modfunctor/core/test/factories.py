"""Built-in theories and corrupted variants of them, shared by the test suites."""
from functools import lru_cache
from typing import Sequence

import numpy as np

from modfunctor.core.basic_data import BasicData, encode_matrix, FKey
from modfunctor.core.generators import abelian, fibonacci, trivial

ALL_TAU: FKey = ("tau", "tau", "tau", "tau", "tau", "tau")
"""The corner entry of the all-τ F-move of the Fibonacci theory."""


@lru_cache(maxsize=None)
def trivial_theory() -> BasicData:
    return trivial()


@lru_cache(maxsize=None)
def fibonacci_theory() -> BasicData:
    return fibonacci()


@lru_cache(maxsize=None)
def abelian_theory(k: int) -> BasicData:
    return abelian(k)


THEORY_NAMES = ["trivial", "fibonacci", "abelian-2", "abelian-3"]


def theory(name: str) -> BasicData:
    """A cached built-in theory by its generator name."""
    if name.startswith("abelian-"):
        return abelian_theory(int(name.split("-")[1]))
    return {"trivial": trivial_theory, "fibonacci": fibonacci_theory}[name]()


def perturbed_f(bd: BasicData, key: FKey, delta: float=1e-3) -> BasicData:
    """``bd`` with the first entry of one F block shifted by ``delta``."""
    block = np.array(bd.f_block(*key))
    block.flat[0] += delta
    return bd.with_f_block(key, block)


def perturbed_twist(bd: BasicData, label: str, delta: float=1e-3) -> BasicData:
    """``bd`` with one twist scalar multiplied by exp(i delta), leaving F, R and B untouched."""
    twists = {x: bd.twist(x) for x in bd.label_set}
    twists[label] = twists[label] * np.exp(1j * delta)
    return bd.with_twists(twists)


def relabeled(bd: BasicData, order: Sequence[str]) -> BasicData:
    """``bd`` reloaded with its labels declared in ``order``, S permuted to match."""
    ls = bd.label_set
    permutation = [ls.index(label) for label in order]
    document = bd.to_json()
    document["labels"] = list(order)
    if bd.has_s:
        document["S"] = encode_matrix(bd.s[np.ix_(permutation, permutation)])
    return BasicData.from_json(document)
