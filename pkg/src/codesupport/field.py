"""Exact arithmetic in small finite fields GF(p^m).

Elements are integer indices in ``[0, q)``. The base-p digits of an index,
least significant first, are the coefficients of the residue polynomial, so in
GF(8) with modulus x^3 + x + 1 the element ``x`` has index 2 and ``x + 1`` has
index 3. Index 0 is zero and index 1 is one for every field.

All arithmetic goes through ``q x q`` lookup tables built once at
construction. The tables are numpy arrays so that whole codeword blocks can
be combined with fancy indexing.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NonPrimeCharacteristic,
    ReducibleModulus,
    UnsupportedField,
)

Q_MAX = 64

# Smallest irreducible monic polynomial for each (p, m), ordered by the integer
# whose base-p digits are the non-leading coefficients. Coefficients are listed
# from the constant term up to the leading 1.
BUILTIN_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),  # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),  # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1),  # x^5 + x^2 + 1
    (2, 6): (1, 1, 0, 0, 0, 0, 1),  # x^6 + x + 1
    (3, 2): (1, 0, 1),  # x^2 + 1
    (3, 3): (1, 2, 0, 1),  # x^3 + 2x + 1
    (5, 2): (2, 0, 1),  # x^2 + 2
    (7, 2): (1, 0, 1),  # x^2 + 1
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by the monic polynomial b over GF(p), low-order first."""
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db:
        lead = a[-1] % p
        if lead:
            shift = len(a) - 1 - db
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - lead * bi) % p
        a.pop()
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive test: no monic factor of degree 1..deg/2 divides ``modulus``."""
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_rem(modulus, list(low) + [1], p)):
                return False
    return True


def _normalize_modulus(p: int, m: int, modulus: Sequence[int]) -> tuple[int, ...]:
    coeffs = [int(c) for c in modulus]
    if any(c < 0 or c >= p for c in coeffs):
        raise ReducibleModulus(f"modulus coefficients must lie in [0, {p})")
    if len(coeffs) == m:
        coeffs.append(1)  # leading 1 omitted
    if len(coeffs) != m + 1 or coeffs[-1] != 1:
        raise ReducibleModulus(f"modulus must be a monic polynomial of degree {m}")
    return tuple(coeffs)


class FieldSpec:
    """The finite field GF(p^m), immutable once built.

    Use :func:`field_new` (or :func:`gf`) rather than calling this directly;
    those cache instances so the lookup tables are built once per field.
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        p, m = int(p), int(m)
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
        if m < 1:
            raise UnsupportedField(f"extension degree must be >= 1, got {m}")
        q = p**m
        if q > Q_MAX:
            raise FieldTooLarge(f"GF({p}^{m}) has {q} elements; the limit is {Q_MAX}")
        if m == 1:
            if modulus:
                raise UnsupportedField("prime fields take no modulus")
            mod: tuple[int, ...] = ()
        else:
            if modulus is None or len(modulus) == 0:
                if (p, m) not in BUILTIN_MODULI:
                    raise UnsupportedField(f"no built-in modulus for GF({p}^{m}); supply one")
                mod = BUILTIN_MODULI[(p, m)]
            else:
                mod = _normalize_modulus(p, m, modulus)
                if not is_irreducible(mod, p):
                    raise ReducibleModulus(f"modulus {list(mod)} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = mod
        self._build_tables()

    def _digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.m)]

    def _from_digits(self, digits: Sequence[int]) -> int:
        return sum(d * self.p**i for i, d in enumerate(digits))

    def _poly_mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        return self._from_digits(_poly_rem(prod, self.modulus, self.p))

    def _build_tables(self) -> None:
        p, q = self.p, self.q
        idx = np.arange(q)
        digits = np.stack([(idx // p**i) % p for i in range(self.m)], axis=1)
        weights = p ** np.arange(self.m)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        neg = ((-digits) % p) @ weights
        mul = np.array([[self._poly_mul(a, b) for b in range(q)] for a in range(q)])
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        self.add_table = add.astype(np.uint8)
        self.neg_table = neg.astype(np.uint8)
        self.sub_table = self.add_table[:, self.neg_table]
        self.mul_table = mul.astype(np.uint8)
        self.inv_table = inv.astype(np.uint8)
        trace = np.zeros(q, dtype=np.int64)
        for a in range(q):
            t, power = 0, a
            for _ in range(self.m):
                t = int(self.add_table[t, power])
                power = self._pow_table(power, p)
            trace[a] = t
        if trace.max() >= p:
            raise AssertionError("trace left the prime subfield")
        self.trace_table = trace.astype(np.uint8)
        for table in (self.add_table, self.neg_table, self.sub_table, self.mul_table,
                      self.inv_table, self.trace_table):
            table.flags.writeable = False

    def _pow_table(self, a: int, e: int) -> int:
        result = 1
        for _ in range(e):
            result = int(self.mul_table[result, a])
        return result

    # scalar arithmetic on indices

    def _check(self, a) -> int:
        if isinstance(a, FieldElement):
            if a.field != self:
                raise FieldMismatch(f"element of {a.field} used in {self}")
            return a.index
        a = int(a)
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element index of {self}")
        return a

    def add(self, a, b) -> int:
        return int(self.add_table[self._check(a), self._check(b)])

    def sub(self, a, b) -> int:
        return int(self.sub_table[self._check(a), self._check(b)])

    def neg(self, a) -> int:
        return int(self.neg_table[self._check(a)])

    def mul(self, a, b) -> int:
        return int(self.mul_table[self._check(a), self._check(b)])

    def inv(self, a) -> int:
        a = self._check(a)
        if a == 0:
            raise DivisionByZero("zero has no multiplicative inverse")
        return int(self.inv_table[a])

    def pow(self, a, e: int) -> int:
        a = self._check(a)
        if e < 0:
            a, e = self.inv(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = int(self.mul_table[result, base])
            base = int(self.mul_table[base, base])
            e >>= 1
        return result

    def trace(self, a) -> int:
        """Absolute trace x + x^p + ... + x^(p^(m-1)), returned as an integer in [0, p)."""
        return int(self.trace_table[self._check(a)])

    def __call__(self, index: int) -> FieldElement:
        return FieldElement(self, self._check(index))

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, i) for i in range(self.q)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"


@dataclass(frozen=True)
class FieldElement:
    """An element of a specific field; supports the usual operators."""

    field: FieldSpec
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.field.q:
            raise ValueError(f"{self.index} is not an element index of {self.field}")

    def _wrap(self, index: int) -> FieldElement:
        return FieldElement(self.field, index)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field} and {other.field}")
            return other.index
        return self.field._check(other)

    def __add__(self, other):
        return self._wrap(self.field.add(self.index, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.index, self._other(other)))

    def __rsub__(self, other):
        return self._wrap(self.field.sub(self._other(other), self.index))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.index, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.field.mul(self.index, self.field.inv(self._other(other))))

    def __neg__(self):
        return self._wrap(self.field.neg(self.index))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.index, e))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.index))

    def trace(self) -> int:
        return self.field.trace(self.index)

    def __int__(self) -> int:
        return self.index

    __index__ = __int__

    def __repr__(self) -> str:
        return f"{self.field!r}({self.index})"


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    return FieldSpec(p, m, modulus)


def field_new(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build (or fetch from cache) the field GF(p^m).

    ``modulus`` lists coefficients from the constant term upwards; the leading
    1 may be included or omitted. When ``m > 1`` and it is omitted, the
    built-in modulus for ``(p, m)`` is used.
    """
    if modulus is not None and len(modulus) == 0:
        modulus = None
    if modulus is not None and m > 1 and is_prime(p) and p**m <= Q_MAX:
        modulus = _normalize_modulus(p, m, modulus)
        if BUILTIN_MODULI.get((p, m)) == modulus:
            modulus = None
    return _cached_field(int(p), int(m), None if modulus is None else tuple(modulus))


def gf(q: int) -> FieldSpec:
    """Field of order ``q`` (a prime power) with the built-in modulus."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    return field_new(p, m)
