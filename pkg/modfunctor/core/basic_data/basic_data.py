import itertools
import json
import logging
import os
import warnings
from typing import Any, BinaryIO, Dict, IO, Iterator, List, Mapping, Optional, Tuple, Union

import numpy as np
from semantic_version import Version

from modfunctor.core.basic_data._format import (
    CURRENT_VERSION,
    DocumentKeys,
    MAX_SUPPORTED_VERSION,
    MIN_SUPPORTED_VERSION,
)
from modfunctor.core.config import ModFunctorConfig
from modfunctor.core.errors import (
    DataFormatWarning,
    DocumentError,
    RelationError,
    ShapeError,
    StructureError,
)
from modfunctor.core.labels import DimTable, LabelSet
from modfunctor.core.types import Triple
from .validator import basic_data_validator

logger = logging.getLogger(__name__)

FKey = Tuple[str, str, str, str, str, str]
"""(μ, ξ, λ, κ, ν, ν̃): the quadruple of an F-move followed by the two internal labels."""


def _decode_complex(pair, where: str) -> complex:
    value = complex(float(pair[0]), float(pair[1]))
    if not np.isfinite(value):
        raise DocumentError(f"non-finite number in {where}")
    return value


def decode_matrix(rows, where: str) -> np.ndarray:
    if len(rows) == 0:
        return np.zeros((0, 0), dtype=complex)
    widths = {len(row) for row in rows}
    if len(widths) != 1:
        raise ShapeError(f"ragged matrix in {where}")
    return np.array(
        [[_decode_complex(pair, where) for pair in row] for row in rows], dtype=complex
    ).reshape(len(rows), widths.pop())


def nonzero_f_keys(dims: DimTable) -> Iterator[FKey]:
    """Every (μ, ξ, λ, κ, ν, ν̃) whose F block has no zero-dimensional factor."""
    ls, dim = dims.label_set, dims.dim
    for nu, mu, lam in dims.triples():
        for kappa, xi in itertools.product(ls, repeat=2):
            if not dim(ls.dual(nu), kappa, xi):
                continue
            for nutilde in ls:
                if dim(nutilde, lam, kappa) and dim(ls.dual(nutilde), xi, mu):
                    yield mu, xi, lam, kappa, nu, nutilde


def encode_matrix(matrix: np.ndarray) -> List[List[List[float]]]:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(matrix)]


class BasicData:
    """The basic data of a modular functor: the label set, the dimensions of the
    three-punctured sphere spaces, the F-move blocks, the R (rotation) and B (half-twist)
    matrices, the twist scalars d and, optionally, the S-matrix.

    Conventions
    -----------
    Every stored matrix acts source-first: basis vector i of the source goes to
    Σ_j M[i, j] ζ_j of the target, so "A then B" is ``A @ B``.

    - R(λ, μ, ν): Z_{λ,μ,ν} → Z_{μ,ν,λ}
    - B(λ, μ, ν): Z_{λ,μ,ν} → Z_{λ,ν,μ}
    - F block (μ, ξ, λ, κ, ν, ν̃) is a tensor F[i, j, k, l] with
      i ∈ Z_{ν,μ,λ}, j ∈ Z_{ν†,κ,ξ} (source) and k ∈ Z_{ν̃,λ,κ}, l ∈ Z_{ν̃†,ξ,μ} (target).
      In documents it is written as a matrix with rows (k, l) and columns (i, j).

    Instances are immutable after construction and safe to share between processes.
    """

    def __init__(
            self,
            label_set: LabelSet,
            dims: DimTable,
            f_blocks: Mapping[FKey, np.ndarray],
            r: Mapping[Triple, np.ndarray],
            b: Mapping[Triple, np.ndarray],
            d: Mapping[str, complex],
            s: Optional[np.ndarray]=None,
            tol: Optional[float]=None,
            comment: Optional[str]=None,
    ) -> None:
        config = ModFunctorConfig()
        self._label_set = label_set
        self._dims = dims
        self._tol = float(config.tol if tol is None else tol)
        self._cond_limit = config.cond_limit
        self._comment = comment
        self._f = {key: np.asarray(block, dtype=complex) for key, block in f_blocks.items()}
        self._r = {key: np.asarray(m, dtype=complex) for key, m in r.items()}
        self._b = {key: np.asarray(m, dtype=complex) for key, m in b.items()}
        self._d = {label: complex(value) for label, value in d.items()}
        self._s = None if s is None else np.asarray(s, dtype=complex)
        self._validate(strict=config.strict)
        for array in itertools.chain(
                self._f.values(), self._r.values(), self._b.values(),
                [] if self._s is None else [self._s]):
            array.setflags(write=False)

    # ------------------------------------------------------------------ validation

    def _validate(self, strict: bool) -> None:
        ls, dims = self._label_set, self._dims
        if dims.label_set != ls:
            raise StructureError("dimension table is over a different label set")
        if self._tol <= 0:
            raise DocumentError(f"tolerance must be positive, got {self._tol}")
        problems = dims.symmetry_violations()
        if problems:
            raise StructureError(f"dimension table violates the small-sphere axioms: {problems[0]}")

        for name, table in (("R", self._r), ("B", self._b)):
            for triple in table:
                for x in triple:
                    ls.check(x)
            for triple in itertools.product(ls, repeat=3):
                n = dims.dim(*triple)
                if n == 0:
                    if triple in table and table[triple].size:
                        raise ShapeError(f"{name} given on zero-dimensional space {triple}")
                    continue
                if triple not in table:
                    raise ShapeError(f"missing {name} matrix at {triple}, expected ({n}, {n})")
                if table[triple].shape != (n, n):
                    raise ShapeError(
                        f"{name} matrix at {triple} has shape {table[triple].shape}, "
                        f"expected ({n}, {n})")
                if not np.all(np.isfinite(table[triple])):
                    raise DocumentError(f"non-finite entry in {name} at {triple}")
                if np.linalg.cond(table[triple]) > self._cond_limit:
                    raise StructureError(f"{name} matrix at {triple} is not invertible")

        for key, block in self._f.items():
            for x in key:
                ls.check(x)
            expected = self.f_shape(*key)
            if block.shape != expected:
                raise ShapeError(
                    f"F block at quad {key[:4]} nu={key[4]!r} nutilde={key[5]!r} has shape "
                    f"{block.shape}, expected {expected}")
            if not np.all(np.isfinite(block)):
                raise DocumentError(f"non-finite entry in F block {key}")
        for key in self.nonzero_f_keys():
            if key not in self._f:
                raise ShapeError(
                    f"missing F block at quad {key[:4]} nu={key[4]!r} nutilde={key[5]!r}, "
                    f"expected shape {self.f_shape(*key)}")

        if set(self._d) != set(ls):
            raise StructureError(f"twists must be given for exactly the labels {list(ls)}")
        for label, value in self._d.items():
            if not np.isfinite(value):
                raise DocumentError(f"non-finite twist scalar for {label!r}")
            if abs(value) <= self._tol:
                raise StructureError(f"zero twist scalar for label {label!r}")

        if self._s is not None:
            n = len(ls)
            if self._s.shape != (n, n):
                raise ShapeError(f"S has shape {self._s.shape}, expected ({n}, {n})")
            if not np.all(np.isfinite(self._s)):
                raise DocumentError("non-finite entry in S")
            if np.linalg.cond(self._s) > self._cond_limit:
                raise StructureError("S is not invertible")

        if strict:
            for quad in itertools.product(ls, repeat=4):
                assembled = self.assembled_f(*quad)
                if assembled.size and np.linalg.cond(assembled) > self._cond_limit:
                    raise StructureError(f"assembled F at {quad} is not invertible")

    # ------------------------------------------------------------------ accessors

    @property
    def label_set(self) -> LabelSet:
        return self._label_set

    @property
    def dims(self) -> DimTable:
        return self._dims

    @property
    def tol(self) -> float:
        return self._tol

    @property
    def cond_limit(self) -> float:
        return self._cond_limit

    @property
    def comment(self) -> Optional[str]:
        return self._comment

    @property
    def s(self) -> Optional[np.ndarray]:
        return self._s

    @property
    def has_s(self) -> bool:
        return self._s is not None

    def f_keys(self) -> Iterator[FKey]:
        return iter(sorted(self._f, key=self._key_order))

    def nonzero_f_keys(self) -> Iterator[FKey]:
        return nonzero_f_keys(self._dims)

    def _key_order(self, key):
        return tuple(self._label_set.index(x) for x in key)

    def f_shape(self, mu: str, xi: str, lam: str, kappa: str, nu: str, nutilde: str
                ) -> Tuple[int, int, int, int]:
        dim, dual = self._dims.dim, self._label_set.dual
        return (dim(nu, mu, lam), dim(dual(nu), kappa, xi),
                dim(nutilde, lam, kappa), dim(dual(nutilde), xi, mu))

    def f_block(self, mu: str, xi: str, lam: str, kappa: str, nu: str, nutilde: str
                ) -> np.ndarray:
        """F tensor F[i, j, k, l] of the block ν → ν̃ of the F-move at (μ, ξ; λ, κ). Blocks
        with a zero-dimensional factor are returned as empty arrays of the right shape."""
        key = (mu, xi, lam, kappa, nu, nutilde)
        block = self._f.get(key)
        if block is None:
            return np.zeros(self.f_shape(*key), dtype=complex)
        return block

    def assembled_f(self, mu: str, xi: str, lam: str, kappa: str) -> np.ndarray:
        """The whole F-move at (μ, ξ; λ, κ) as one matrix. Rows run over (ν, i, j), columns
        over (ν̃, k, l), both in label-then-basis order."""
        rows = []
        for nu in self._label_set:
            row = []
            for nutilde in self._label_set:
                block = self.f_block(mu, xi, lam, kappa, nu, nutilde)
                di, dj, dk, dl = block.shape
                row.append(block.reshape(di * dj, dk * dl))
            rows.append(row)
        return np.block(rows)

    def r_matrix(self, x: str, y: str, z: str) -> np.ndarray:
        """R: Z_{x,y,z} → Z_{y,z,x}."""
        n = self._dims.dim(x, y, z)
        if n == 0:
            return np.zeros((0, 0), dtype=complex)
        return self._r[(x, y, z)]

    def r2_matrix(self, x: str, y: str, z: str) -> np.ndarray:
        """R²: Z_{x,y,z} → Z_{z,x,y}."""
        return self.r_matrix(x, y, z) @ self.r_matrix(y, z, x)

    def b_matrix(self, x: str, y: str, z: str) -> np.ndarray:
        """B: Z_{x,y,z} → Z_{x,z,y}."""
        n = self._dims.dim(x, y, z)
        if n == 0:
            return np.zeros((0, 0), dtype=complex)
        return self._b[(x, y, z)]

    def twist(self, label: str) -> complex:
        """d_μ, the scalar by which the Dehn twist about a puncture labeled μ acts."""
        return self._d[self._label_set.check(label)]

    def twists(self) -> np.ndarray:
        return np.array([self._d[x] for x in self._label_set], dtype=complex)

    def e_scalar(self, lam: str) -> complex:
        """E_λ, the entry of the F block with both internal labels equal to the unit at
        (λ, λ†; λ†, λ).

        Raises
        ------
        RelationError :
            if |E_λ| is within tolerance of zero
        """
        ls = self._label_set
        unit, lam_dual = ls.unit, ls.dual(lam)
        block = self.f_block(lam, lam_dual, lam_dual, lam, unit, unit)
        if block.shape != (1, 1, 1, 1):
            raise RelationError(f"E block at {lam!r} has shape {block.shape}, expected 1x1")
        value = complex(block[0, 0, 0, 0])
        if abs(value) <= self._tol:
            raise RelationError(f"vanishing E at label {lam!r}")
        return value

    def twisted_f_block(self, mu: str, xi: str, lam: str, kappa: str, nu: str, nutilde: str
                        ) -> np.ndarray:
        """The twisted F-move F̃ = (B R² ⊗ Id) F (Id ⊗ B R) between
        Z_{ν,μ,λ} ⊗ Z_{κ,ν†,ξ} and Z_{κ,λ,ν̃} ⊗ Z_{ν̃†,ξ,μ}.

        Returned as a tensor T[k, i, j, m] with k ∈ Z_{ν,μ,λ}, i ∈ Z_{κ,ν†,ξ} (source) and
        j ∈ Z_{κ,λ,ν̃}, m ∈ Z_{ν̃†,ξ,μ} (target).
        """
        nu_dual = self._label_set.dual(nu)
        into_f = self.r_matrix(kappa, nu_dual, xi) @ self.b_matrix(nu_dual, xi, kappa)
        out_of_f = self.r2_matrix(nutilde, lam, kappa) @ self.b_matrix(kappa, nutilde, lam)
        block = self.f_block(mu, xi, lam, kappa, nu, nutilde)
        return np.einsum("ir,krsm,sj->kijm", into_f, block, out_of_f)

    # ------------------------------------------------------------------ derived data

    def r_cube_scalars(self) -> Dict[Triple, complex]:
        """The scalar by which R³ acts on each nonzero Z_{λ,μ,ν}. A :py:class:`DataFormatWarning`
        is emitted for triples where R³ is not a multiple of the identity; the value recorded
        there is the normalized trace."""
        scalars = {}
        for triple in self._dims.triples():
            x, y, z = triple
            cube = self.r_matrix(x, y, z) @ self.r_matrix(y, z, x) @ self.r_matrix(z, x, y)
            scalar = np.trace(cube) / cube.shape[0]
            residual = np.abs(cube - scalar * np.eye(cube.shape[0])).max()
            if residual >= self._tol:
                warnings.warn(f"R^3 is not scalar at {triple} (residual {residual:.2e})",
                              DataFormatWarning)
            scalars[triple] = complex(scalar)
        return scalars

    # ------------------------------------------------------------------ copies

    def _replace(self, **overrides) -> "BasicData":
        fields: Dict[str, Any] = dict(
            label_set=self._label_set, dims=self._dims, f_blocks=self._f, r=self._r, b=self._b,
            d=self._d, s=self._s, tol=self._tol, comment=self._comment)
        fields.update(overrides)
        return BasicData(**fields)

    def without_s(self) -> "BasicData":
        return self._replace(s=None)

    def with_s(self, s: Optional[np.ndarray]) -> "BasicData":
        return self._replace(s=s)

    def with_tol(self, tol: float) -> "BasicData":
        return self._replace(tol=tol)

    def with_f_block(self, key: FKey, block: np.ndarray) -> "BasicData":
        blocks = dict(self._f)
        blocks[key] = block
        return self._replace(f_blocks=blocks)

    def with_twists(self, d: Mapping[str, complex]) -> "BasicData":
        return self._replace(d=d)

    # ------------------------------------------------------------------ serialization

    @classmethod
    def from_json(cls, document: Mapping[str, Any], source: Optional[str]=None) -> "BasicData":
        """Build from a parsed basic-data document.

        Parameters
        ----------
        document : Mapping[str, Any]
            parsed json object
        source : Optional[str]
            informational name of the document's origin, used in messages

        Raises
        ------
        DocumentError :
            if the document does not match the schema, its version is unsupported, or a tensor
            has the wrong shape
        """
        validator = basic_data_validator()
        problem = validator.first_error(document)
        if problem is not None:
            validator.validate_object(document, source)
            raise DocumentError(f"invalid basic-data document: {problem}")

        version = document.get(DocumentKeys.VERSION_KEY)
        if version is not None:
            version = Version(version)
            if not (MIN_SUPPORTED_VERSION <= version <= MAX_SUPPORTED_VERSION):
                raise DocumentError(
                    f"document version {version} is not supported, the supported range is "
                    f"{MIN_SUPPORTED_VERSION} to {MAX_SUPPORTED_VERSION}")

        label_set = LabelSet(
            document[DocumentKeys.LABELS_KEY],
            document[DocumentKeys.DAGGER_KEY],
            document[DocumentKeys.UNIT_KEY],
        )
        dims = DimTable.from_entries(
            label_set, [tuple(entry) for entry in document[DocumentKeys.DIMS_KEY]])

        f_blocks: Dict[FKey, np.ndarray] = {}
        for entry in document[DocumentKeys.F_KEY]:
            key = tuple(entry[DocumentKeys.QUAD_KEY]) + (
                entry[DocumentKeys.NU_KEY], entry[DocumentKeys.NUTILDE_KEY])
            for x in key:
                label_set.check(x)
            where = f"F block {key}"
            if key in f_blocks:
                raise DocumentError(f"duplicate {where}")
            di, dj, dk, dl = (dims.dim(key[4], key[0], key[2]),
                              dims.dim(label_set.dual(key[4]), key[3], key[1]),
                              dims.dim(key[5], key[2], key[3]),
                              dims.dim(label_set.dual(key[5]), key[1], key[0]))
            matrix = decode_matrix(entry[DocumentKeys.MATRIX_KEY], where)
            if matrix.shape != (dk * dl, di * dj):
                raise ShapeError(
                    f"{where} has matrix shape {matrix.shape}, expected {(dk * dl, di * dj)}")
            f_blocks[key] = matrix.reshape(dk, dl, di, dj).transpose(2, 3, 0, 1)

        def triple_table(name: str) -> Dict[Triple, np.ndarray]:
            table: Dict[Triple, np.ndarray] = {}
            for entry in document[name]:
                triple = tuple(entry[DocumentKeys.TRIPLE_KEY])
                if triple in table:
                    raise DocumentError(f"duplicate {name} matrix at {triple}")
                table[triple] = decode_matrix(entry[DocumentKeys.MATRIX_KEY], f"{name} {triple}")
            return table

        twists = {
            label: _decode_complex(value, f"twist {label!r}")
            for label, value in document[DocumentKeys.TWISTS_KEY].items()
        }
        s = document.get(DocumentKeys.S_KEY)
        if s is not None:
            s = decode_matrix(s, "S")

        return cls(
            label_set, dims, f_blocks,
            triple_table(DocumentKeys.R_KEY), triple_table(DocumentKeys.B_KEY), twists,
            s=s, tol=document.get(DocumentKeys.TOLERANCE_KEY),
            comment=document.get(DocumentKeys.COMMENT_KEY),
        )

    @classmethod
    def open_json(cls, json_file: str) -> "BasicData":
        """Load a basic-data document from a file path.

        Examples
        --------
        Load a generated Fibonacci-type theory::

            >>> from modfunctor import BasicData
            >>> bd = BasicData.open_json("fibonacci.json")
            >>> bd.e_scalar("tau")
            (1.618033988749895+0j)

        """
        with open(os.path.expanduser(json_file), "rb") as fh:
            return load(fh, json_file)

    def to_json(self) -> Dict[str, Any]:
        """Render the basic-data document as a json-serializable dictionary."""
        ls = self._label_set
        document: Dict[str, Any] = {DocumentKeys.VERSION_KEY: str(CURRENT_VERSION)}
        if self._comment is not None:
            document[DocumentKeys.COMMENT_KEY] = self._comment
        document[DocumentKeys.LABELS_KEY] = list(ls)
        document[DocumentKeys.DAGGER_KEY] = ls.dagger
        document[DocumentKeys.UNIT_KEY] = ls.unit
        document[DocumentKeys.DIMS_KEY] = [list(entry) for entry in self._dims.entries()]
        document[DocumentKeys.F_KEY] = []
        for key in self.f_keys():
            block = self._f[key]
            if not block.size:
                continue
            di, dj, dk, dl = block.shape
            document[DocumentKeys.F_KEY].append({
                DocumentKeys.QUAD_KEY: list(key[:4]),
                DocumentKeys.NU_KEY: key[4],
                DocumentKeys.NUTILDE_KEY: key[5],
                DocumentKeys.MATRIX_KEY: encode_matrix(
                    block.transpose(2, 3, 0, 1).reshape(dk * dl, di * dj)),
            })
        for name, table in ((DocumentKeys.R_KEY, self._r), (DocumentKeys.B_KEY, self._b)):
            document[name] = [
                {DocumentKeys.TRIPLE_KEY: list(triple),
                 DocumentKeys.MATRIX_KEY: encode_matrix(table[triple])}
                for triple in sorted(table, key=self._key_order) if table[triple].size
            ]
        document[DocumentKeys.TWISTS_KEY] = {
            label: [self._d[label].real, self._d[label].imag] for label in ls}
        if self._s is not None:
            document[DocumentKeys.S_KEY] = encode_matrix(self._s)
        document[DocumentKeys.TOLERANCE_KEY] = self._tol
        return document

    def save(self, output: Union[str, IO[str]]) -> None:
        """Write the basic-data document to a file path or text stream."""
        if isinstance(output, str):
            with open(os.path.expanduser(output), "w") as fh:
                json.dump(self.to_json(), fh, indent=2)
        else:
            json.dump(self.to_json(), output, indent=2)

    def __repr__(self) -> str:
        return (f"<BasicData labels={list(self._label_set)} F blocks={len(self._f)} "
                f"S={'yes' if self.has_s else 'no'} tol={self._tol:g}>")


def load(source: Union[BinaryIO, IO[str], bytes, str], source_name: Optional[str]=None
         ) -> BasicData:
    """Parse and validate a basic-data document.

    Parameters
    ----------
    source : Union[BinaryIO, IO[str], bytes, str]
        a binary or text stream, or the raw document
    source_name : Optional[str]
        informational name of the document's origin, used in messages

    Returns
    -------
    BasicData :
        shape-checked basic data; the relation suite is not run

    Raises
    ------
    DocumentError :
        with the line and column of a json syntax error, or describing the first schema or
        shape problem
    """
    raw = source.read() if hasattr(source, "read") else source
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as ex:
            raise DocumentError(f"document is not valid UTF-8: {ex}")
    try:
        document = json.loads(raw)
    except json.JSONDecodeError as ex:
        raise DocumentError(
            f"could not parse basic-data document: {ex.msg}", ex.lineno, ex.colno) from ex
    if not isinstance(document, dict):
        raise DocumentError("a basic-data document must be a json object")
    logger.debug("parsed basic-data document %s", source_name or "<stream>")
    return BasicData.from_json(document, source_name)


def e_scalar(bd: BasicData, lam: str) -> complex:
    """E_λ of ``bd``; see :py:meth:`BasicData.e_scalar`."""
    return bd.e_scalar(lam)


def twisted_F_block(bd: BasicData, mu: str, xi: str, lam: str, kappa: str, nu: str,
                    nutilde: str) -> np.ndarray:
    """Twisted F block of ``bd``; see :py:meth:`BasicData.twisted_f_block`."""
    return bd.twisted_f_block(mu, xi, lam, kappa, nu, nutilde)
