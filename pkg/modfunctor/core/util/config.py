import json
import os
from typing import Any, Dict, Mapping, Sequence, Union

_REQUIRED = object()


class Config:
    """A nested configuration mapping read from json text, a json file, or a mapping.

    A string starting with "@" names a json file, and a missing file gives an empty
    configuration. Any other string is parsed as json.
    """

    def __init__(self, value: Union[str, Mapping[str, Any], None]=None) -> None:
        data: Dict[str, Any] = {}
        if isinstance(value, str) and value.startswith("@"):
            filename = os.path.expanduser(value[1:])
            if os.path.exists(filename):
                with open(filename, "r") as fh:
                    data = json.load(fh)
        elif isinstance(value, str) and value:
            data = json.loads(value)
        elif value:
            data = json.loads(json.dumps(value))
        self.data = data

    def lookup(self, keys: Sequence[str], value: Any=_REQUIRED, remove: bool=False) -> Any:
        """Follow ``keys`` down the nested mapping.

        A missing or null entry yields ``value``, or raises KeyError when no default is given.
        With ``remove``, a found entry is deleted and parents left empty are pruned, so that
        whatever remains in :py:attr:`data` afterwards was never looked up.
        """
        parents = []
        node: Any = self.data
        for key in keys:
            if not isinstance(node, dict) or node.get(key) is None:
                if value is _REQUIRED:
                    raise KeyError(tuple(keys))
                return value
            parents.append(node)
            node = node[key]
        if node == {}:
            if value is _REQUIRED:
                raise KeyError(tuple(keys))
            return value
        if remove:
            for parent, key in zip(reversed(parents), reversed(keys)):
                del parent[key]
                if parent:
                    break
        return node
