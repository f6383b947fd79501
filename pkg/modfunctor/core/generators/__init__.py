import re
from typing import Callable, Dict

from modfunctor.core.basic_data import BasicData
from modfunctor.core.errors import GeneratorError
from .abelian import abelian, abelian_dims
from .fibonacci import fibonacci, fibonacci_dims
from .trivial import trivial

GENERATORS: Dict[str, Callable[[], BasicData]] = {
    "trivial": trivial,
    "fibonacci": fibonacci,
}

_ABELIAN = re.compile(r"^abelian-(\d+)$")


def generate(name: str) -> BasicData:
    """Build a named theory: ``trivial``, ``fibonacci`` or ``abelian-k``.

    Raises
    ------
    GeneratorError :
        unknown name, or the generator fails to calibrate
    """
    match = _ABELIAN.match(name)
    if match:
        return abelian(int(match.group(1)))
    if name not in GENERATORS:
        raise GeneratorError(
            f"unknown theory {name!r}; choose from {sorted(GENERATORS)} or abelian-k")
    return GENERATORS[name]()
