"""Linear codes given by a canonical generator matrix."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import DimensionMismatch, EnumerationTooLarge, ZeroCode
from .field import FieldSpec
from .linalg import MatrixFq, _as_vector, nullspace_basis, reduce_rows, rref

ENUM_MAX = 1 << 24
# rows per enumeration block; bounds peak memory at BLOCK * n bytes
BLOCK = 1 << 14


class LinearCode:
    """An ``[n, k]`` code over ``field``.

    ``gen`` is always the RREF of the generator the code was built from, so two
    codes are equal exactly when their generators are equal. Build codes with
    :func:`code_from_generator`.
    """

    def __init__(self, gen: MatrixFq, pivots: Sequence[int]):
        self.gen = gen
        self.pivots = tuple(pivots)

    @property
    def field(self) -> FieldSpec:
        return self.gen.field

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    @property
    def size(self) -> int:
        return self.field.q**self.k

    @functools.cached_property
    def dual(self) -> LinearCode:
        return code_from_generator(nullspace_basis(self.gen))

    def codewords(self, enum_max: int = ENUM_MAX) -> Iterator[tuple[int, ...]]:
        return codewords(self, enum_max)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.gen == other.gen

    def __hash__(self) -> int:
        return hash(self.gen)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over {self.field!r})"


def code_from_generator(M: MatrixFq | Sequence[Sequence[int]], field: FieldSpec | None = None,
                        n: int | None = None) -> LinearCode:
    """Row space of ``M`` as a :class:`LinearCode`; dependent rows are allowed.

    ``M`` may be a :class:`MatrixFq` or nested lists of indices, in which case
    ``field`` is required (and ``n`` when there are no rows).
    """
    if not isinstance(M, MatrixFq):
        if field is None:
            raise TypeError("field is required when passing a plain matrix")
        M = MatrixFq(field, M, cols=n)
    R, pivots = rref(M)
    return LinearCode(R, pivots)


def zero_code(field: FieldSpec, n: int) -> LinearCode:
    return LinearCode(MatrixFq.zeros(field, 0, n), ())


def full_space(field: FieldSpec, n: int) -> LinearCode:
    return LinearCode(MatrixFq.identity(field, n), range(n))


def dual(code: LinearCode) -> LinearCode:
    """The ``[n, n-k]`` dual code."""
    return code.dual


def _span_table(field: FieldSpec, rows: np.ndarray, n: int) -> np.ndarray:
    # all combinations of `rows`, earliest row as most significant digit
    words = np.zeros((1, n), dtype=np.uint8)
    scalars = np.arange(field.q, dtype=np.uint8)
    for row in rows:
        multiples = field.mul_table[scalars[:, None], row[None, :]]
        words = field.add_table[words[:, None, :], multiples[None, :, :]].reshape(-1, n)
    return words


def check_enumerable(code: LinearCode, enum_max: int = ENUM_MAX) -> None:
    if code.size > enum_max:
        raise EnumerationTooLarge(code.size, enum_max)


def codeword_blocks(code: LinearCode, enum_max: int = ENUM_MAX,
                    block: int = BLOCK) -> Iterator[np.ndarray]:
    """Yield every codeword, as consecutive ``uint8`` arrays of shape ``(b, n)``.

    Codewords come in message-counter order: message ``(m_1, ..., m_k)`` read
    as a base-q number with ``m_1`` most significant, codeword ``m @ gen``.
    """
    check_enumerable(code, enum_max)
    f, k = code.field, code.k
    low = 0
    while low < k and f.q ** (low + 1) <= block:
        low += 1
    rows = code.gen.entries
    low_words = _span_table(f, rows[k - low:], code.n)
    high_words = _span_table(f, rows[: k - low], code.n)
    for offset in high_words:
        yield f.add_table[offset[None, :], low_words]


def codewords(code: LinearCode, enum_max: int = ENUM_MAX) -> Iterator[tuple[int, ...]]:
    """All ``q^k`` codewords as tuples of element indices, in message order."""
    for blk in codeword_blocks(code, enum_max):
        for word in blk.tolist():
            yield tuple(word)


def contains_many(code: LinearCode, V) -> np.ndarray:
    """Boolean membership for each row of ``V``, decided by row reduction."""
    arr = np.asarray(V, dtype=np.uint8)
    if arr.ndim != 2 or arr.shape[1] != code.n:
        raise DimensionMismatch(f"expected vectors of length {code.n}")
    residue = reduce_rows(code.gen, code.pivots, arr)
    return ~residue.any(axis=1)


def contains(code: LinearCode, v) -> bool:
    vec = _as_vector(code.field, v)
    if vec.size != code.n:
        raise DimensionMismatch(f"vector of length {vec.size} for a code of length {code.n}")
    return bool(contains_many(code, vec.reshape(1, -1))[0])


def standard_basis_vector(field: FieldSpec, n: int, i: int) -> tuple[int, ...]:
    """``e_i`` for a 0-based coordinate ``i``."""
    return tuple(1 if j == i else 0 for j in range(n))


def basis_membership(code: LinearCode) -> np.ndarray:
    """``out[i]`` is True when ``e_i`` lies in the code (0-based ``i``)."""
    return contains_many(code, np.eye(code.n, dtype=np.uint8))


@dataclass(frozen=True)
class CoordinatePartition:
    """Label per coordinate: where the standard basis vector ``e_i`` lives.

    ``"A"``: in the code and its dual, ``"B"``: only the code, ``"C"``: only the
    dual, ``"D"``: neither. Index sets returned by the accessors are 1-based.
    """

    labels: tuple[str, ...]

    def indices(self, label: str) -> tuple[int, ...]:
        return tuple(i + 1 for i, lab in enumerate(self.labels) if lab == label)

    @property
    def a(self) -> tuple[int, ...]:
        return self.indices("A")

    @property
    def b(self) -> tuple[int, ...]:
        return self.indices("B")

    @property
    def c(self) -> tuple[int, ...]:
        return self.indices("C")

    @property
    def d(self) -> tuple[int, ...]:
        return self.indices("D")

    def as_dict(self) -> dict[str, list[int]]:
        return {lab: list(self.indices(lab)) for lab in "ABCD"}


def standard_basis_partition(code: LinearCode) -> CoordinatePartition:
    in_code = basis_membership(code)
    in_dual = basis_membership(code.dual)
    labels = []
    for x, y in zip(in_code, in_dual):
        labels.append("A" if x and y else "B" if x else "C" if y else "D")
    return CoordinatePartition(tuple(labels))


def weight(v) -> int:
    return sum(1 for x in v if int(x) != 0)


def min_distance(code: LinearCode, enum_max: int = ENUM_MAX) -> int:
    """Minimum weight of a nonzero codeword."""
    if code.k == 0:
        raise ZeroCode("the zero code has no nonzero codewords")
    best = code.n
    for blk in codeword_blocks(code, enum_max):
        w = np.count_nonzero(blk, axis=1)
        w = w[w > 0]
        if w.size:
            best = min(best, int(w.min()))
    return best


def is_self_dual(code: LinearCode) -> bool:
    return code.n == 2 * code.k and code == code.dual
