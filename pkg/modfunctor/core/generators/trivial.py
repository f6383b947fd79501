import numpy as np

from modfunctor.core.basic_data import BasicData
from modfunctor.core.labels import DimTable, LabelSet
from modfunctor.core.types import UNIT_LABEL
from ._standard import assemble


def trivial() -> BasicData:
    """The theory with the single label 0, every space one-dimensional and every matrix 1."""
    label_set = LabelSet.from_names([UNIT_LABEL])
    dims = DimTable.from_rule(label_set, lambda a, b, c: 1)
    return assemble(dims, {UNIT_LABEL: 1}, np.ones((1, 1)), comment="trivial theory")
