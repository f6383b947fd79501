import platform
from functools import lru_cache
from json import JSONEncoder
from typing import Any, Dict, Mapping

import numpy as np
import pkg_resources

import modfunctor.core
from modfunctor.core.types import CORE_DEPENDENCIES


@lru_cache(maxsize=1)
def get_core_dependency_info() -> Mapping[str, str]:
    dependency_info = dict()
    for dependency in CORE_DEPENDENCIES:
        dependency_info[dependency] = get_dependency_version(dependency)
    return dependency_info


def get_dependency_version(dependency: str) -> str:
    try:
        return pkg_resources.get_distribution(dependency).version
    except pkg_resources.DistributionNotFound:
        return "not installed"


@lru_cache(maxsize=1)
def get_release_tag() -> str:
    if not modfunctor.core.is_release_tag:
        return "Running modfunctor from source"
    return modfunctor.core.is_release_tag


@lru_cache(maxsize=1)
def get_os_info() -> Mapping[str, str]:
    return {"Platform": platform.system(),
            "Version:": platform.version(),
            "Python Version": platform.python_version()}


def provenance(method: str, arguments: Mapping[str, Any]) -> Dict[str, Any]:
    """One provenance log entry: which computation ran, with which arguments, where."""
    return {
        "method": method,
        "arguments": dict(arguments),
        "os": get_os_info(),
        "dependencies": get_core_dependency_info(),
        "release tag": get_release_tag(),
    }


class LogEncoder(JSONEncoder):
    """
    JSON encodes provenance logs and result fragments. Complex numbers become [re, im] pairs,
    numpy scalars and arrays become python values; anything else is encoded by its repr.
    """
    def default(self, o):
        if isinstance(o, (complex, np.complexfloating)):
            return [float(o.real), float(o.imag)]
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.floating):
            return float(o)
        if isinstance(o, np.ndarray):
            return o.tolist()
        try:
            return super(LogEncoder, self).default(o)
        except TypeError:
            return repr(o)
