from typing import Mapping, Tuple, Union

from ._constants import (
    AugmentedEnum,
    CORE_DEPENDENCIES,
    DecompositionTree,
    DEFAULT_COND_LIMIT,
    DEFAULT_TOLERANCE,
    Reading,
    Relations,
    Route,
    UNIT_LABEL,
)

Number = Union[int, float, complex]
Label = str
Triple = Tuple[str, str, str]
Quad = Tuple[str, str, str, str]
SColumn = Mapping[str, complex]
from ._validated_table import ValidatedTable  # noqa: E402
