"""Dense matrices over GF(q): row reduction, rank and kernels."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, FieldMismatch
from .field import FieldElement, FieldSpec


class MatrixFq:
    """Row-major matrix of element indices over ``field``.

    ``entries`` is a read-only ``uint8`` array of shape ``(rows, cols)``.
    """

    def __init__(self, field: FieldSpec, entries, cols: int | None = None):
        try:
            arr = np.array([[int(x) for x in row] for row in entries], dtype=np.int64)
        except ValueError as exc:
            raise DimensionMismatch("matrix rows must all have the same length") from exc
        if arr.size == 0:
            if cols is None:
                cols = arr.shape[1] if arr.ndim == 2 else 0
            arr = np.zeros((len(arr), cols), dtype=np.int64)
        if arr.ndim != 2:
            raise DimensionMismatch("matrix rows must all have the same length")
        if cols is not None and arr.shape[1] != cols:
            raise DimensionMismatch(f"expected {cols} columns, got {arr.shape[1]}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"matrix entries must be element indices of {field}")
        self.field = field
        self.entries = arr.astype(np.uint8)
        self.entries.flags.writeable = False

    @classmethod
    def _wrap(cls, field: FieldSpec, arr: np.ndarray) -> MatrixFq:
        # trusted constructor for arrays already known to be valid
        obj = cls.__new__(cls)
        obj.field = field
        obj.entries = np.array(arr, dtype=np.uint8).reshape(arr.shape)
        obj.entries.flags.writeable = False
        return obj

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> MatrixFq:
        return cls._wrap(field, np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> MatrixFq:
        return cls._wrap(field, np.eye(n, dtype=np.uint8))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def tolist(self) -> list[list[int]]:
        return self.entries.astype(int).tolist()

    def __getitem__(self, key):
        return self.entries[key]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixFq):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"MatrixFq({self.field!r}, {self.tolist()})"


def _as_vector(field: FieldSpec, v) -> np.ndarray:
    out = []
    for x in v:
        if isinstance(x, FieldElement) and x.field != field:
            raise FieldMismatch(f"vector entry from {x.field} used with {field}")
        out.append(field._check(x))
    return np.array(out, dtype=np.uint8)


def rref(M: MatrixFq) -> tuple[MatrixFq, list[int]]:
    """Reduced row echelon form with zero rows dropped, plus the pivot columns.

    Pivots are chosen as the first nonzero entry at or below the current row.
    """
    f = M.field
    A = M.entries.copy()
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = f.mul_table[f.inv_table[A[r, c]], A[r]]
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = f.sub_table[A[i], f.mul_table[A[i, c], A[r]]]
        pivots.append(c)
        r += 1
    return MatrixFq._wrap(f, A[:r]), pivots


def rank(M: MatrixFq) -> int:
    return len(rref(M)[1])


def nullspace_basis(M: MatrixFq) -> MatrixFq:
    """Basis (as rows) of the right kernel ``{v : M v^T = 0}``.

    A matrix with no rows has the identity as its kernel basis.
    """
    f = M.field
    R, pivots = rref(M)
    n = M.cols
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for b, fc in enumerate(free):
        basis[b, fc] = 1
        for j, pc in enumerate(pivots):
            basis[b, pc] = f.neg_table[R.entries[j, fc]]
    K = MatrixFq._wrap(f, basis)
    if K.rows and M.rows:
        residual = mat_mul_transpose(M, K)
        if residual.any():
            raise AssertionError("kernel basis vector not orthogonal to the input rows")
    return K


def vec_dot(field: FieldSpec, u, v) -> int:
    """Standard bilinear form sum(u_i * v_i) over the field, as an element index."""
    a, b = _as_vector(field, u), _as_vector(field, v)
    if a.shape != b.shape:
        raise DimensionMismatch(f"vectors of length {a.size} and {b.size}")
    acc = 0
    for x in field.mul_table[a, b]:
        acc = int(field.add_table[acc, x])
    return acc


def mat_vec_mul(M: MatrixFq, v) -> np.ndarray:
    """Return ``M v^T`` as a vector of element indices."""
    vec = _as_vector(M.field, v)
    if vec.size != M.cols:
        raise DimensionMismatch(f"matrix has {M.cols} columns, vector has length {vec.size}")
    return mat_mul_transpose(M, MatrixFq._wrap(M.field, vec.reshape(1, -1)))[:, 0]


def mat_mul_transpose(A: MatrixFq, B: MatrixFq) -> np.ndarray:
    """``A B^T`` as a ``(A.rows, B.rows)`` index array."""
    if A.field != B.field:
        raise FieldMismatch("matrices over different fields")
    if A.cols != B.cols:
        raise DimensionMismatch(f"column counts differ: {A.cols} vs {B.cols}")
    f = A.field
    acc = np.zeros((A.rows, B.rows), dtype=np.uint8)
    for c in range(A.cols):
        acc = f.add_table[acc, f.mul_table[A.entries[:, c, None], B.entries[None, :, c]]]
    return acc


def reduce_rows(R: MatrixFq, pivots: Sequence[int], V: np.ndarray) -> np.ndarray:
    """Residues of the rows of ``V`` after eliminating against an RREF matrix.

    A row of ``V`` lies in the row space of ``R`` exactly when its residue is zero.
    """
    f = R.field
    out = np.array(V, dtype=np.uint8, copy=True)
    for j, pc in enumerate(pivots):
        out = f.sub_table[out, f.mul_table[out[:, pc, None], R.entries[None, j, :]]]
    return out
