"""Framed mapping classes of the torus.

A mapping class of the torus is an integer matrix of determinant one acting on H_1 = Z². Framed
classes carry an integer framing, and composition corrects the sum of framings by Wall's
signature cocycle evaluated on Lagrangian lines.
"""
from typing import Optional, Sequence, Tuple

import numpy as np

Line = Tuple[int, int]

_OMEGA = np.array([[0, -1], [1, 0]], dtype=np.int64)


def omega(x: Sequence[int], y: Sequence[int]) -> int:
    """The standard symplectic pairing x · J · y on Z²."""
    return int(np.asarray(x, dtype=np.int64) @ _OMEGA @ np.asarray(y, dtype=np.int64))


def canonical_line(vector: Sequence[int]) -> Line:
    """The line spanned by a primitive vector, represented with its first nonzero entry positive.

    Raises
    ------
    ValueError :
        the vector is zero, not integral, or not primitive
    """
    a, b = (int(x) for x in vector)
    if (a, b) != tuple(vector):
        raise ValueError(f"Lagrangian {tuple(vector)} is not an integer vector")
    if a == 0 and b == 0:
        raise ValueError("Lagrangian line needs a nonzero vector")
    if np.gcd(a, b) != 1:
        raise ValueError(f"Lagrangian {(a, b)} is not primitive")
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return a, b


def wall_sigma(l1: Sequence[int], l2: Sequence[int], l3: Sequence[int]) -> int:
    """Wall's signature cocycle of three Lagrangian lines in the symplectic plane.

    The signature of q(x1, x2, x3) = ω(x1, x2) on the triples x_i ∈ L_i with x1 + x2 + x3 = 0. For
    three distinct lines that space is spanned by x_i = ω(v_j, v_k) v_i over cyclic (i, j, k), so
    the value is the sign of ω(v2, v3) ω(v3, v1) ω(v1, v2); it is 0 as soon as two lines coincide.
    """
    v1, v2, v3 = (canonical_line(v) for v in (l1, l2, l3))
    product = omega(v2, v3) * omega(v3, v1) * omega(v1, v2)
    return int(np.sign(product))


class FramedMapClass:
    """A mapping class ``m`` with an integer ``framing``, together with the Lagrangian line it is
    framed against on its source and the line carried on its target.

    Parameters
    ----------
    m : array-like
        2×2 integer matrix with determinant 1
    framing : int
        the framing integer s
    lagrangian : Sequence[int]
        primitive vector spanning the source Lagrangian
    target_lagrangian : Sequence[int]
        primitive vector spanning the target Lagrangian; defaults to ``lagrangian``
    """

    def __init__(
            self,
            m,
            framing: int=0,
            lagrangian: Sequence[int]=(1, 0),
            target_lagrangian: Optional[Sequence[int]]=None,
    ) -> None:
        matrix = np.asarray(m)
        if matrix.shape != (2, 2) or not np.array_equal(matrix, np.round(matrix)):
            raise ValueError(f"mapping class must be a 2x2 integer matrix, got {matrix!r}")
        matrix = matrix.astype(np.int64)
        det = matrix[0, 0] * matrix[1, 1] - matrix[0, 1] * matrix[1, 0]
        if det != 1:
            raise ValueError(f"mapping class must have determinant 1, got {det}")
        matrix.setflags(write=False)
        self._m = matrix
        self._framing = int(framing)
        self._lagrangian = canonical_line(lagrangian)
        self._target = canonical_line(
            lagrangian if target_lagrangian is None else target_lagrangian)

    @property
    def m(self) -> np.ndarray:
        return self._m

    @property
    def framing(self) -> int:
        return self._framing

    @property
    def lagrangian(self) -> Line:
        return self._lagrangian

    @property
    def target_lagrangian(self) -> Line:
        return self._target

    def push(self, line: Sequence[int]) -> Line:
        """The image line m·L."""
        return canonical_line(self._m @ np.asarray(line, dtype=np.int64))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FramedMapClass):
            return NotImplemented
        return (np.array_equal(self._m, other.m)
                and self._framing == other.framing
                and self._lagrangian == other.lagrangian
                and self._target == other.target_lagrangian)

    def __hash__(self) -> int:
        return hash((self._m.tobytes(), self._framing, self._lagrangian, self._target))

    def __repr__(self) -> str:
        return (f"FramedMapClass(m={self._m.tolist()}, framing={self._framing}, "
                f"lagrangian={self._lagrangian}, target_lagrangian={self._target})")


def compose_framed(f2: FramedMapClass, f1: FramedMapClass) -> FramedMapClass:
    """The framed composite f2 ∘ f1 = (f2 f1, s2 + s1 − σ(f2 f1 L1, f2 L2, L3)).

    L1 is the source Lagrangian of f1, L2 the source Lagrangian of f2 (which must be the line f1
    delivers on its target) and L3 the target Lagrangian of f2.

    Raises
    ------
    ValueError :
        the target Lagrangian of f1 differs from the source Lagrangian of f2
    """
    if f1.target_lagrangian != f2.lagrangian:
        raise ValueError(
            f"cannot compose: f1 ends on {f1.target_lagrangian}, f2 starts on {f2.lagrangian}")
    product = f2.m @ f1.m
    l1, l2, l3 = f1.lagrangian, f2.lagrangian, f2.target_lagrangian
    correction = wall_sigma(
        canonical_line(product @ np.asarray(l1)), f2.push(l2), l3)
    return FramedMapClass(
        product, f2.framing + f1.framing - correction, l1, l3)
