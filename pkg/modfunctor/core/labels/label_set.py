from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

from modfunctor.core.errors import LabelError, StructureError
from modfunctor.core.types import UNIT_LABEL


class LabelSet:
    """The finite label set Λ of a modular functor: an ordered list of opaque label names with
    an involution † and a distinguished unit label 0 satisfying 0† = 0.

    The declared order is used for every label-indexed matrix (fusion matrices, S, C, ...).

    Examples
    --------
    The label set of a Fibonacci-type theory::

        >>> from modfunctor import LabelSet
        >>> labels = LabelSet.from_names(["0", "tau"])
        >>> labels.dual("tau")
        'tau'
        >>> labels.index("tau")
        1

    """

    def __init__(
            self,
            labels: Sequence[str],
            dagger: Mapping[str, str],
            unit: str=UNIT_LABEL,
    ) -> None:
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise StructureError(f"labels are not pairwise distinct: {labels}")
        if unit not in labels:
            raise StructureError(f"missing unit label {unit!r}")
        if set(dagger.keys()) != set(labels):
            raise StructureError(
                f"dagger must be defined on exactly the labels {labels}, got {sorted(dagger)}")
        for x in labels:
            if dagger[x] not in dagger:
                raise StructureError(f"dagger({x!r}) = {dagger[x]!r} is not a label")
            if dagger[dagger[x]] != x:
                raise StructureError(f"dagger is not an involution at {x!r}")
        if dagger[unit] != unit:
            raise StructureError(f"the unit label {unit!r} must be self-dual")

        self._labels: Tuple[str, ...] = labels
        self._dagger: Dict[str, str] = dict(dagger)
        self._unit = unit
        self._index: Dict[str, int] = {label: i for i, label in enumerate(labels)}

    @classmethod
    def from_names(
            cls, names: Sequence[str], dagger: Optional[Mapping[str, str]]=None, unit: str=None,
    ) -> "LabelSet":
        """Build a label set whose unit is the first name (or ``unit``). Labels missing from
        ``dagger`` are self-dual."""
        dagger = dict(dagger or {})
        full = {name: dagger.get(name, name) for name in names}
        return cls(names, full, names[0] if unit is None else unit)

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def unit(self) -> str:
        return self._unit

    @property
    def unit_index(self) -> int:
        """Position of the unit label; S rows and columns are addressed through it."""
        return self._index[self._unit]

    @property
    def dagger(self) -> Dict[str, str]:
        return dict(self._dagger)

    def check(self, x: str) -> str:
        if x not in self._index:
            raise LabelError(x)
        return x

    def dual(self, x: str) -> str:
        """Return x†."""
        return self._dagger[self.check(x)]

    def index(self, x: str) -> int:
        """Position of ``x`` in the declared order."""
        return self._index[self.check(x)]

    def is_self_dual(self, x: str) -> bool:
        return self.dual(x) == x

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self._labels)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabelSet):
            return False
        return (self._labels == other._labels and self._dagger == other._dagger
                and self._unit == other._unit)

    def __hash__(self) -> int:
        return hash((self._labels, tuple(sorted(self._dagger.items())), self._unit))

    def __repr__(self) -> str:
        return f"<LabelSet {list(self._labels)} unit={self._unit!r}>"


def dual(ls: LabelSet, x: str) -> str:
    """Return x† in ``ls``, raising :py:class:`LabelError` for unknown labels."""
    return ls.dual(x)
