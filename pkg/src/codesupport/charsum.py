"""Additive character sums evaluated exactly in Z[zeta_p].

The fixed nontrivial additive character of GF(p^m) is
``chi(x) = zeta_p ** trace(x)``. Values are :class:`CyclotomicInt` instances,
so every character-sum identity becomes an exact equality test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .code import ENUM_MAX, LinearCode, codeword_blocks, contains_many
from .errors import DimensionMismatch
from .field import FieldElement, FieldSpec
from .linalg import _as_vector

# Chunk size for scanning many u at once; bounds the (u, codeword) work array.
_SCAN_CELLS = 1 << 21


@dataclass(frozen=True)
class CyclotomicInt:
    """``sum(coeffs[j] * zeta_p**j)`` with ``coeffs[p-1] == 0``.

    The relation ``1 + zeta + ... + zeta**(p-1) = 0`` is used to clear the last
    slot, which makes the representation unique.
    """

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        if len(c) != self.p:
            raise ValueError(f"expected {self.p} coefficients, got {len(c)}")
        last = c[-1]
        if last:
            c = tuple(x - last for x in c)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_int(cls, p: int, value: int) -> CyclotomicInt:
        return cls(p, (value,) + (0,) * (p - 1))

    @classmethod
    def zeta(cls, p: int, j: int = 1) -> CyclotomicInt:
        c = [0] * p
        c[j % p] = 1
        return cls(p, tuple(c))

    @classmethod
    def from_counts(cls, p: int, counts: Sequence[int]) -> CyclotomicInt:
        """``sum(counts[r] * zeta**r)``: a sum of roots of unity tallied by exponent."""
        return cls(p, tuple(int(x) for x in counts))

    def _coerce(self, other) -> CyclotomicInt:
        if isinstance(other, CyclotomicInt):
            if other.p != self.p:
                raise ValueError("cyclotomic integers of different orders")
            return other
        if isinstance(other, int):
            return CyclotomicInt.from_int(self.p, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicInt(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        out = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[(i + j) % p] += a * b
        return CyclotomicInt(p, tuple(out))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CyclotomicInt.from_int(self.p, other)
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_integer(self) -> int | None:
        """The value as a rational integer, or None when it is not one."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __repr__(self) -> str:
        terms = [f"{a}*z^{j}" if j else str(a) for j, a in enumerate(self.coeffs) if a]
        return f"CyclotomicInt(p={self.p}: {' + '.join(terms) or '0'})"


def char(field: FieldSpec, x: int | FieldElement) -> CyclotomicInt:
    """The canonical nontrivial additive character ``zeta_p ** trace(x)``."""
    return CyclotomicInt.zeta(field.p, field.trace(x))


def char_sum(field: FieldSpec, xs: Iterable) -> CyclotomicInt:
    total = CyclotomicInt.from_int(field.p, 0)
    for x in xs:
        total = total + char(field, x)
    return total


def full_field_char_sum(field: FieldSpec) -> CyclotomicInt:
    """Sum of the character over every element of the field."""
    return char_sum(field, range(field.q))


def scaled_char_sum(field: FieldSpec, c: int | FieldElement) -> CyclotomicInt:
    """Sum over nonzero ``lam`` of ``chi(lam * c)``."""
    return char_sum(field, (field.mul(lam, c) for lam in range(1, field.q)))


def _trace_counts(field: FieldSpec, dots: np.ndarray) -> np.ndarray:
    # per row of `dots`, how many entries have each trace value in [0, p)
    p = field.p
    t = field.trace_table[dots].astype(np.int64)
    rows = dots.shape[0]
    flat = (t + p * np.arange(rows)[:, None]).ravel()
    return np.bincount(flat, minlength=rows * p).reshape(rows, p)


def lemma_char_sum(code: LinearCode, u, enum_max: int = ENUM_MAX) -> CyclotomicInt:
    """``S(u) = sum over codewords c of chi(u . c)``, by full enumeration."""
    f = code.field
    vec = _as_vector(f, u)
    if vec.size != code.n:
        raise DimensionMismatch(f"vector of length {vec.size} for a code of length {code.n}")
    counts = np.zeros(f.p, dtype=np.int64)
    for blk in codeword_blocks(code, enum_max):
        acc = np.zeros(blk.shape[0], dtype=np.uint8)
        for i in range(code.n):
            acc = f.add_table[acc, f.mul_table[vec[i], blk[:, i]]]
        counts += _trace_counts(f, acc.reshape(1, -1))[0]
    return CyclotomicInt.from_counts(f.p, counts)


def _digits(field: FieldSpec, X: np.ndarray) -> np.ndarray:
    # (rows, n) element indices -> (rows, n*m) base-p digits, coordinate-major
    p, m = field.p, field.m
    X = X.astype(np.int64)
    d = np.stack([(X // p**s) % p for s in range(m)], axis=-1)
    return d.reshape(X.shape[0], -1)


def _trace_form(field: FieldSpec) -> np.ndarray:
    """Gram matrix ``trace(x^s * x^t)`` of the F_p-bilinear form ``trace(a*b)``."""
    p, m = field.p, field.m
    return np.array([[int(field.trace_table[field.mul_table[p**s, p**t]]) for t in range(m)]
                     for s in range(m)], dtype=np.int64)


def _lemma_counts(code: LinearCode, U: np.ndarray, enum_max: int) -> np.ndarray:
    # counts[j, r] = #{c in C : trace(U[j] . c) = r}
    f = code.field
    p = f.p
    counts = np.zeros((U.shape[0], p), dtype=np.int64)
    if U.shape[0] == 0:
        return counts
    # trace(u . c) = sum_i trace(u_i c_i) is F_p-bilinear in the digit vectors,
    # so one integer matrix product gives every residue; float64 is exact here
    K = np.kron(np.eye(code.n, dtype=np.int64), _trace_form(f))
    UK = ((_digits(f, U) @ K) % p).astype(np.float64)
    for blk in codeword_blocks(code, enum_max):
        Cd = _digits(f, blk).astype(np.float64).T
        step = max(1, _SCAN_CELLS // blk.shape[0])
        for start in range(0, U.shape[0], step):
            res = (UK[start:start + step] @ Cd).astype(np.int64) % p
            rows = res.shape[0]
            flat = (res + p * np.arange(rows)[:, None]).ravel()
            counts[start:start + step] += np.bincount(flat, minlength=rows * p).reshape(rows, p)
    return counts


def lemma_char_sums(code: LinearCode, us, enum_max: int = ENUM_MAX) -> list[CyclotomicInt]:
    """:func:`lemma_char_sum` for every row of ``us`` at once.

    Unlike the scalar route, which accumulates ``u . c`` with field tables,
    this evaluates ``trace(u . c)`` as an integer bilinear form over F_p.
    """
    U = np.asarray(us, dtype=np.uint8).reshape(-1, code.n)
    return [CyclotomicInt.from_counts(code.field.p, row) for row in _lemma_counts(code, U, enum_max)]


def lemma_expected(code: LinearCode, u) -> CyclotomicInt:
    """``|C|`` when ``u`` lies in the dual code, else 0 (membership by row reduction)."""
    vec = _as_vector(code.field, u).reshape(1, -1)
    inside = bool(contains_many(code.dual, vec)[0])
    return CyclotomicInt.from_int(code.field.p, code.size if inside else 0)


def all_vectors(field: FieldSpec, n: int) -> np.ndarray:
    """Every vector of GF(q)^n, in lexicographic index order."""
    q = field.q
    idx = np.arange(q**n)
    return np.stack([(idx // q ** (n - 1 - i)) % q for i in range(n)], axis=1).astype(np.uint8)


@dataclass(frozen=True)
class LemmaScan:
    checked: int
    in_dual: int
    failures: tuple[tuple[tuple[int, ...], CyclotomicInt, CyclotomicInt], ...]

    @property
    def holds(self) -> bool:
        return not self.failures


def scan_lemma(code: LinearCode, us=None, enum_max: int = ENUM_MAX) -> LemmaScan:
    """Compare the enumerated ``S(u)`` with ``|C|``-or-0 for many ``u``.

    ``us`` defaults to the whole space GF(q)^n.
    """
    f = code.field
    U = all_vectors(f, code.n) if us is None else np.asarray(us, dtype=np.uint8).reshape(-1, code.n)
    counts = _lemma_counts(code, U, enum_max)
    inside = contains_many(code.dual, U)
    # canonical form: subtract the last coefficient from every slot
    canon = counts - counts[:, -1:]
    expected = np.zeros_like(canon)
    expected[inside, 0] = code.size
    failures = []
    for j in np.flatnonzero((canon != expected).any(axis=1)):
        failures.append((tuple(int(x) for x in U[j]),
                         CyclotomicInt.from_counts(f.p, counts[j]),
                         CyclotomicInt.from_counts(f.p, expected[j])))
    return LemmaScan(U.shape[0], int(inside.sum()), tuple(failures))
