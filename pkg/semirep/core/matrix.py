"""
Dense exact matrices over a Field.

Row-vector convention throughout: modules act on the right, so a vector v
is a 1 x n matrix and ``v @ A`` applies A. ``nullspace`` therefore means the
LEFT null space {v | v A = 0}.
"""

from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from semirep.core.errors import DimensionMismatch, FieldMismatch
from semirep.core.fields import Field, Scalar


class RowReduction(NamedTuple):
    matrix: "Matrix"
    pivots: Tuple[int, ...]
    rank: int


@dataclass(frozen=True, eq=False)
class Matrix:
    """An immutable rows x cols array of field elements."""

    field: Field
    entries: np.ndarray

    def __post_init__(self):
        if self.entries.ndim != 2:
            raise DimensionMismatch(f"matrix entries must be 2-D, got shape {self.entries.shape}")
        self.entries.flags.writeable = False

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls.zeros(field, 0, cols or 0)
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(field, field.array(rows))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, field.zeros((rows, cols)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        out = field.zeros((n, n))
        for i in range(n):
            out[i, i] = field.one
        return cls(field, out)

    @classmethod
    def unit_rows(cls, field: Field, n: int, indices: Iterable[int]) -> "Matrix":
        indices = list(indices)
        out = field.zeros((len(indices), n))
        for row, col in enumerate(indices):
            out[row, col] = field.one
        return cls(field, out)

    def _wrap(self, entries: np.ndarray) -> "Matrix":
        return Matrix(self.field, self.field.normalize(entries))

    # ------------------------------------------------------------------
    # Shape and access
    # ------------------------------------------------------------------

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.entries.T.copy())

    def __getitem__(self, key) -> Scalar:
        return self.entries[key]

    def row(self, i: int) -> "Matrix":
        return Matrix(self.field, self.entries[i : i + 1, :].copy())

    def take_rows(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(self.field, self.entries[list(indices), :].reshape(len(indices), self.cols))

    def take_cols(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(self.field, self.entries[:, list(indices)].reshape(self.rows, len(indices)))

    def is_zero(self) -> bool:
        return self.entries.size == 0 or not bool(np.any(self.entries != 0))

    def to_lists(self) -> List[List[Scalar]]:
        return [list(r) for r in self.entries]

    def to_json(self) -> List[List]:
        return [[self.field.to_json(x) for x in r] for r in self.entries]

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _check_field(self, other: "Matrix"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        return self._wrap(np.dot(self.entries, other.entries))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return self._wrap(self.entries + other.entries)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return self._wrap(self.entries - other.entries)

    def __neg__(self) -> "Matrix":
        return self._wrap(-self.entries)

    def scale(self, c: Scalar) -> "Matrix":
        return self._wrap(self.entries * self.field.coerce(c))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.field != self.field or other.shape != self.shape:
            return False
        return self.entries.size == 0 or bool(np.all(self.entries == other.entries))

    __hash__ = None

    def __repr__(self) -> str:
        return f"Matrix({self.field}, {self.to_lists()})"

    # ------------------------------------------------------------------
    # Row reduction
    # ------------------------------------------------------------------

    def rref(self) -> RowReduction:
        """Reduced row-echelon form with pivot columns and rank."""
        field = self.field
        work = self.entries.copy()
        rows, cols = work.shape
        pivots: List[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            candidates = np.nonzero(work[r:, c] != 0)[0]
            if candidates.size == 0:
                continue
            p = r + int(candidates[0])
            if p != r:
                work[[r, p], :] = work[[p, r], :]
            work[r, :] = field.normalize(work[r, :] * field.inverse(work[r, c]))
            factors = work[:, c].copy()
            factors[r] = field.zero
            if np.any(factors != 0):
                work = field.normalize(work - np.multiply.outer(factors, work[r, :]))
            pivots.append(c)
            r += 1
        return RowReduction(Matrix(field, work), tuple(pivots), len(pivots))

    def rank(self) -> int:
        return self.rref().rank

    def row_space(self) -> "Matrix":
        """Canonical basis of the row space: the non-zero rows of the RREF."""
        reduced, _, rank = self.rref()
        return Matrix(self.field, reduced.entries[:rank, :].copy())

    def right_nullspace(self) -> "Matrix":
        """Rows form a basis of {x | A x^T = 0}."""
        reduced, pivots, _ = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        out = self.field.zeros((len(free), self.cols))
        for k, f in enumerate(free):
            out[k, f] = self.field.one
            for i, p in enumerate(pivots):
                out[k, p] = -reduced.entries[i, f]
        return self._wrap(out)

    def nullspace(self) -> "Matrix":
        """Rows form a basis of the left null space {v | v A = 0}."""
        return self.T.right_nullspace()

    def contains_rows(self, other: "Matrix") -> bool:
        """True when every row of ``other`` lies in the row space of self."""
        if other.rows == 0:
            return True
        base = self.rank()
        return vstack([self, other], self.cols, self.field).rank() == base

    def same_row_space(self, other: "Matrix") -> bool:
        return self.row_space() == other.row_space()

    def coordinates(self, vectors: "Matrix") -> "Matrix":
        """Coordinates of ``vectors`` in this basis, which must be in RREF.

        Raises ValueError when a vector is outside the row space.
        """
        _, pivots, rank = self.rref()
        if rank != self.rows:
            raise DimensionMismatch("basis rows are linearly dependent")
        coords = vectors.take_cols(pivots)
        if coords @ self != vectors:
            raise ValueError("vector outside the row space")
        return coords


def vstack(mats: Sequence[Matrix], cols: int, field: Field) -> Matrix:
    mats = [m for m in mats if m.rows]
    if not mats:
        return Matrix.zeros(field, 0, cols)
    return Matrix(field, np.vstack([m.entries for m in mats]))


def hstack(mats: Sequence[Matrix], rows: int, field: Field) -> Matrix:
    mats = [m for m in mats if m.cols]
    if not mats:
        return Matrix.zeros(field, rows, 0)
    return Matrix(field, np.hstack([m.entries for m in mats]))


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with row-major index (i, k) -> i * b.rows + k."""
    outer = np.multiply.outer(a.entries, b.entries)
    entries = outer.transpose(0, 2, 1, 3).reshape(a.rows * b.rows, a.cols * b.cols)
    return Matrix(a.field, a.field.normalize(entries))


def block_matrix(
    blocks: Sequence[Sequence[Optional[Matrix]]], block_size: int, field: Field
) -> Matrix:
    """Assemble a square grid of block_size x block_size blocks; None is a zero block.

    Block (i, j) occupies rows i*block_size.. and columns j*block_size..,
    so the outer index is the block index and the inner one the coordinate.
    """
    n_rows = len(blocks)
    n_cols = len(blocks[0]) if n_rows else 0
    out = field.zeros((n_rows * block_size, n_cols * block_size))
    for i, block_row in enumerate(blocks):
        for j, block in enumerate(block_row):
            if block is None:
                continue
            out[i * block_size : (i + 1) * block_size, j * block_size : (j + 1) * block_size] = block.entries
    return Matrix(field, out)


class EchelonBasis:
    """Incrementally grown, fully reduced row basis.

    Rows stay reduced against every pivot, so sorting them by pivot column
    gives the RREF of their span at any time.
    """

    def __init__(self, field: Field, dim: int):
        self.field = field
        self.dim = dim
        self._rows: List[np.ndarray] = []
        self._pivots: List[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def is_full(self) -> bool:
        return self.rank == self.dim

    def reduce(self, vector: np.ndarray) -> np.ndarray:
        field = self.field
        out = vector
        for row, p in zip(self._rows, self._pivots):
            if out[p] != 0:
                out = field.normalize(out - out[p] * row)
        return out

    def add(self, vector: np.ndarray) -> Optional[np.ndarray]:
        """Insert a vector; returns the new basis row, or None if dependent."""
        field = self.field
        w = self.reduce(vector)
        nonzero = np.nonzero(w != 0)[0]
        if nonzero.size == 0:
            return None
        p = int(nonzero[0])
        w = field.normalize(w * field.inverse(w[p]))
        for i, row in enumerate(self._rows):
            if row[p] != 0:
                self._rows[i] = field.normalize(row - row[p] * w)
        self._rows.append(w)
        self._pivots.append(p)
        return w

    def contains(self, vector: np.ndarray) -> bool:
        return not bool(np.any(self.reduce(vector) != 0))

    def matrix(self) -> Matrix:
        if not self._rows:
            return Matrix.zeros(self.field, 0, self.dim)
        order = np.argsort(self._pivots, kind="stable")
        return Matrix(self.field, np.vstack([self._rows[i] for i in order]))
