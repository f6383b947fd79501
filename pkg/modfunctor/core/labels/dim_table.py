import itertools
from typing import Callable, Dict, Iterable, Iterator, List, Tuple

import numpy as np

from modfunctor.core.errors import StructureError
from modfunctor.core.types import Triple
from .label_set import LabelSet


class DimTable:
    """dim Z_{λ,μ,ν} for every label triple, stored as a non-negative integer array indexed in
    label order.

    D is the primary table; the fusion multiplicities N_{λ,μ}^ν = D(λ,μ,ν†) are derived from it.
    """

    def __init__(self, label_set: LabelSet, table: np.ndarray) -> None:
        n = len(label_set)
        table = np.asarray(table)
        if table.shape != (n, n, n):
            raise StructureError(f"dimension table must have shape {(n, n, n)}, got {table.shape}")
        if not np.issubdtype(table.dtype, np.integer):
            if not np.all(np.equal(np.mod(table, 1), 0)):
                raise StructureError("dimensions must be integers")
            table = table.astype(np.int64)
        if np.any(table < 0):
            raise StructureError("dimensions must be non-negative")
        self._label_set = label_set
        self._table = table.astype(np.int64)
        self._table.setflags(write=False)

    @classmethod
    def from_entries(
            cls, label_set: LabelSet, entries: Iterable[Tuple[str, str, str, int]]
    ) -> "DimTable":
        """Build from explicit (λ, μ, ν, dim) entries; triples not listed have dimension 0."""
        n = len(label_set)
        table = np.zeros((n, n, n), dtype=np.int64)
        for lam, mu, nu, dim in entries:
            table[label_set.index(lam), label_set.index(mu), label_set.index(nu)] = dim
        return cls(label_set, table)

    @classmethod
    def from_rule(cls, label_set: LabelSet, rule: Callable[[str, str, str], int]) -> "DimTable":
        """Build by evaluating ``rule(λ, μ, ν)`` on every triple."""
        return cls.from_entries(
            label_set,
            ((a, b, c, rule(a, b, c)) for a, b, c in itertools.product(label_set, repeat=3)))

    @property
    def label_set(self) -> LabelSet:
        return self._label_set

    @property
    def table(self) -> np.ndarray:
        return self._table

    def dim(self, lam: str, mu: str, nu: str) -> int:
        ls = self._label_set
        return int(self._table[ls.index(lam), ls.index(mu), ls.index(nu)])

    def n(self, lam: str, mu: str, nu: str) -> int:
        """Fusion multiplicity N_{λ,μ}^ν = D(λ, μ, ν†)."""
        return self.dim(lam, mu, self._label_set.dual(nu))

    def triples(self) -> Iterator[Triple]:
        """All triples with nonzero dimension, in label order."""
        for lam, mu, nu in itertools.product(self._label_set, repeat=3):
            if self.dim(lam, mu, nu):
                yield lam, mu, nu

    def entries(self) -> List[Tuple[str, str, str, int]]:
        return [(a, b, c, self.dim(a, b, c)) for a, b, c in self.triples()]

    def fusion_matrices(self) -> "FusionMatrixFamily":
        return FusionMatrixFamily(self)

    def symmetry_violations(self) -> List[str]:
        """Describe every violation of the unit, cyclic and swap symmetries. Empty when the
        table is consistent with the small-sphere axioms."""
        ls = self._label_set
        problems = []
        for mu, nu in itertools.product(ls, repeat=2):
            expected = int(nu == ls.dual(mu))
            if self.dim(ls.unit, mu, nu) != expected:
                problems.append(
                    f"dim Z({ls.unit},{mu},{nu}) = {self.dim(ls.unit, mu, nu)}, "
                    f"expected {expected}")
        for a, b, c in itertools.product(ls, repeat=3):
            if self.dim(a, b, c) != self.dim(b, c, a):
                problems.append(f"cyclic symmetry fails at ({a},{b},{c})")
            if self.dim(a, b, c) != self.dim(a, c, b):
                problems.append(f"swap symmetry fails at ({a},{b},{c})")
        return problems

    def dagger_violations(self) -> List[Triple]:
        """Triples where D(λ,μ,ν) ≠ D(λ†,μ†,ν†)."""
        ls = self._label_set
        return [
            (a, b, c) for a, b, c in itertools.product(ls, repeat=3)
            if self.dim(a, b, c) != self.dim(ls.dual(a), ls.dual(b), ls.dual(c))
        ]

    def __eq__(self, other) -> bool:
        return (isinstance(other, DimTable) and self._label_set == other._label_set
                and np.array_equal(self._table, other._table))

    def __repr__(self) -> str:
        return f"<DimTable over {list(self._label_set)}: {len(list(self.triples()))} nonzero>"


class FusionMatrixFamily:
    """The integer matrices N^λ with N^λ_{μ,ν} = D(λ, μ, ν†), rows and columns in label order.

    N^λ is the matrix of the curve operator Z(β, λ) on the unpunctured torus.
    """

    def __init__(self, dims: DimTable) -> None:
        ls = dims.label_set
        dual = [ls.index(ls.dual(x)) for x in ls]
        self._label_set = ls
        self._matrices: Dict[str, np.ndarray] = {
            lam: dims.table[ls.index(lam)][:, dual] for lam in ls
        }

    def __getitem__(self, lam: str) -> np.ndarray:
        return self._matrices[self._label_set.check(lam)]

    def __iter__(self):
        return iter(self._label_set)

    def stack(self) -> np.ndarray:
        """All matrices as an array of shape (|Λ|, |Λ|, |Λ|) in label order."""
        return np.stack([self._matrices[lam] for lam in self._label_set])

    def unit_is_identity(self) -> bool:
        return np.array_equal(self[self._label_set.unit], np.eye(len(self._label_set), dtype=int))

    def max_commutator(self) -> int:
        """Largest entry of any commutator [N^λ, N^μ]; zero for a consistent table."""
        worst = 0
        for a, b in itertools.combinations(self._label_set, 2):
            commutator = self[a] @ self[b] - self[b] @ self[a]
            worst = max(worst, int(np.abs(commutator).max(initial=0)))
        return worst


def dim_triple(dt: DimTable, lam: str, mu: str, nu: str) -> int:
    """dim Z_{λ,μ,ν}."""
    return dt.dim(lam, mu, nu)


def flip_dimensions(dt: DimTable, mu: str, xi: str, lam: str, kappa: str) -> Tuple[int, int]:
    """Dimensions of the source and target of the F-move at (μ, ξ; λ, κ)."""
    ls = dt.label_set
    source = sum(dt.dim(nu, mu, lam) * dt.dim(ls.dual(nu), kappa, xi) for nu in ls)
    target = sum(dt.dim(nu, lam, kappa) * dt.dim(ls.dual(nu), xi, mu) for nu in ls)
    return source, target


def check_flip_dim_consistency(dt: DimTable, mu: str, xi: str, lam: str, kappa: str) -> bool:
    """True iff both factorizations of the four-punctured sphere (μ, ξ, λ, κ) have the same
    dimension."""
    source, target = flip_dimensions(dt, mu, xi, lam, kappa)
    return source == target
