"""Weight and support distributions, enumerator polynomials and duality checks.

Every quantity here is exact: distributions are integer vectors and
polynomials carry :class:`fractions.Fraction` coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Union

import numpy as np

from .code import (
    ENUM_MAX,
    LinearCode,
    basis_membership,
    codeword_blocks,
    is_self_dual,
    standard_basis_partition,
)
from .errors import NonIntegralTransform

Exponent = Union[int, tuple[int, ...]]


class RationalPoly:
    """Sparse polynomial with exact rational coefficients.

    Exponents are ints for univariate polynomials or tuples for the
    homogeneous two-variable form. Zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponent, Fraction | int] | None = None):
        self._terms: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self._terms[e] = c

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, start: int = 0) -> RationalPoly:
        return cls({i + start: c for i, c in enumerate(coeffs)})

    @classmethod
    def monomial(cls, exp: Exponent, coeff=1) -> RationalPoly:
        return cls({exp: coeff})

    @classmethod
    def power_sum(cls, exps: Iterable[int], coeff=1) -> RationalPoly:
        """``coeff * sum(z**i for i in exps)``."""
        out: dict[Exponent, Fraction] = {}
        for e in exps:
            out[e] = out.get(e, Fraction(0)) + Fraction(coeff)
        return cls(out)

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def coeff(self, exp: Exponent) -> Fraction:
        return self._terms.get(exp, Fraction(0))

    def coefficient_list(self, length: int) -> list[Fraction]:
        return [self.coeff(i) for i in range(length)]

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(e if isinstance(e, int) else sum(e) for e in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: RationalPoly) -> RationalPoly:
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return RationalPoly(out)

    def __neg__(self) -> RationalPoly:
        return RationalPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: RationalPoly) -> RationalPoly:
        return self + (-other)

    def __mul__(self, other) -> RationalPoly:
        if isinstance(other, (int, Fraction)):
            return RationalPoly({e: c * other for e, c in self._terms.items()})
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2 if isinstance(e1, int) else tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> RationalPoly:
        if not self._terms:
            return RationalPoly() if k else RationalPoly({0: 1})
        zero_exp = next(iter(self._terms))
        one = 0 if isinstance(zero_exp, int) else tuple(0 for _ in zero_exp)
        result = RationalPoly({one: 1})
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            if isinstance(e, int):
                var = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            else:
                var = "*".join(f"{v}^{k}" for v, k in zip("xy", e) if k)
            parts.append(f"{c}*{var}" if var else str(c))
        return " + ".join(parts)


@dataclass(frozen=True)
class WeightDistribution:
    """``counts[w]`` codewords of Hamming weight ``w``, for ``w = 0..n``."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if len(self.counts) != self.n + 1:
            raise ValueError(f"weight distribution of length {self.n} needs {self.n + 1} counts")

    @property
    def total(self) -> int:
        return sum(self.counts)

    def total_weight(self) -> int:
        return sum(w * a for w, a in enumerate(self.counts))


@dataclass(frozen=True)
class SupportDistribution:
    """``counts[i-1]`` codewords nonzero at coordinate ``i``, for ``i = 1..n``."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if len(self.counts) != self.n:
            raise ValueError(f"support distribution of length {self.n} needs {self.n} counts")

    def __getitem__(self, i: int) -> int:
        """1-based access, matching ``S_i``."""
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return self.counts[i - 1]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def dichotomy_holds(self, q: int, k: int) -> bool:
        """Every count is 0 or ``(q-1) q^(k-1)`` (all zero for ``k = 0``)."""
        allowed = {0} if k == 0 else {0, (q - 1) * q ** (k - 1)}
        return all(c in allowed for c in self.counts)


def weight_distribution(code: LinearCode, enum_max: int = ENUM_MAX) -> WeightDistribution:
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for blk in codeword_blocks(code, enum_max):
        counts += np.bincount(np.count_nonzero(blk, axis=1), minlength=code.n + 1)
    return WeightDistribution(code.n, tuple(counts.tolist()))


def support_distribution_enum(code: LinearCode, enum_max: int = ENUM_MAX) -> SupportDistribution:
    counts = np.zeros(code.n, dtype=np.int64)
    for blk in codeword_blocks(code, enum_max):
        counts += np.count_nonzero(blk, axis=0)
    return SupportDistribution(code.n, tuple(counts.tolist()))


def support_distribution_closed(code: LinearCode) -> SupportDistribution:
    """Support counts from membership of each ``e_i`` in the dual; no enumeration."""
    q, k = code.field.q, code.k
    nonzero = (q - 1) * q ** (k - 1) if k else 0
    in_dual = basis_membership(code.dual)
    return SupportDistribution(code.n, tuple(0 if flag else nonzero for flag in in_dual))


def support_distribution(code: LinearCode, enum_max: int = ENUM_MAX) -> tuple[SupportDistribution, str]:
    """Enumerated counts when the code is small enough, else the closed form.

    Returns the distribution and the route used (``"enum"`` or ``"closed"``).
    """
    if code.size <= enum_max:
        return support_distribution_enum(code, enum_max), "enum"
    return support_distribution_closed(code), "closed"


def support_enumerator(S: SupportDistribution) -> RationalPoly:
    return RationalPoly.from_coeffs(S.counts, start=1)


def weight_enumerator(W: WeightDistribution) -> RationalPoly:
    return RationalPoly.from_coeffs(W.counts)


def homogeneous_weight_enumerator(W: WeightDistribution) -> RationalPoly:
    """``sum(A_w * x**(n-w) * y**w)`` with exponent pairs ``(n-w, w)``."""
    return RationalPoly({(W.n - w, w): a for w, a in enumerate(W.counts)})


@dataclass(frozen=True)
class TotalWeightCheck:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def total_weight_identity(code: LinearCode, enum_max: int = ENUM_MAX) -> TotalWeightCheck:
    """Sum of support counts against sum of ``w * A_w``, from separate passes."""
    lhs = support_distribution_enum(code, enum_max).total
    rhs = weight_distribution(code, enum_max).total_weight()
    return TotalWeightCheck(lhs, rhs)


def _krawtchouk_row(n: int, w: int, q: int) -> list[int]:
    # coefficients of y^j in (x + (q-1) y)^(n-w) (x - y)^w, j = 0..n
    left = [comb(n - w, a) * (q - 1) ** a for a in range(n - w + 1)]
    right = [comb(w, b) * (-1) ** b for b in range(w + 1)]
    out = [0] * (n + 1)
    for a, la in enumerate(left):
        for b, rb in enumerate(right):
            out[a + b] += la * rb
    return out


def macwilliams_transform(W: WeightDistribution | Iterable[int], q: int, n: int | None = None,
                          code_size: int | None = None) -> WeightDistribution:
    """Weight distribution of the dual, from the weight distribution of the code.

    Raises :class:`NonIntegralTransform` when the input cannot be the weight
    distribution of a linear code (sizes inconsistent, or the transform has
    fractional or negative entries).
    """
    counts = list(W.counts if isinstance(W, WeightDistribution) else W)
    if n is None:
        n = len(counts) - 1
    if len(counts) != n + 1:
        raise NonIntegralTransform(f"expected {n + 1} counts, got {len(counts)}")
    if code_size is None:
        code_size = sum(counts)
    if sum(counts) != code_size:
        raise NonIntegralTransform(f"counts sum to {sum(counts)}, not the code size {code_size}")
    if code_size <= 0 or q**n % code_size:
        raise NonIntegralTransform(f"code size {code_size} does not divide {q}^{n}")
    acc = [0] * (n + 1)
    for w, a in enumerate(counts):
        if a:
            for j, kj in enumerate(_krawtchouk_row(n, w, q)):
                acc[j] += a * kj
    out = []
    for j, total in enumerate(acc):
        if total % code_size or total < 0:
            raise NonIntegralTransform(
                f"coefficient of weight {j} is {Fraction(total, code_size)}, not a count"
            )
        out.append(total // code_size)
    return WeightDistribution(n, tuple(out))


@dataclass(frozen=True)
class SupportIdentityReport:
    """Both sides of the normalised support-enumerator identity for a code.

    ``routes`` records how each support distribution was obtained
    (``"enum"`` or ``"closed"``), code first.
    """

    lhs: RationalPoly
    rhs: RationalPoly
    partition_d: tuple[int, ...]
    routes: tuple[str, str]
    support: SupportDistribution
    dual_support: SupportDistribution
    partition: dict[str, list[int]] = dc_field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def verify_support_identity(code: LinearCode, enum_max: int = ENUM_MAX,
                            mode: str = "auto") -> SupportIdentityReport:
    """Check ``S_C/|C| + S_dual/|dual| == (q-1)/q (sum_i z^i + sum_{i in D} z^i)``.

    ``mode`` is ``"enum"`` (both sides enumerated, may raise
    :class:`EnumerationTooLarge`), ``"closed"`` (closed-form counts only) or
    ``"auto"`` (enumerate whichever side fits under ``enum_max``).
    """
    if mode not in ("auto", "enum", "closed"):
        raise ValueError(f"unknown mode {mode!r}")
    q = code.field.q
    dual = code.dual
    sides = []
    for c in (code, dual):
        if mode == "enum" or (mode == "auto" and c.size <= enum_max):
            sides.append((support_distribution_enum(c, enum_max), "enum"))
        else:
            sides.append((support_distribution_closed(c), "closed"))
    (S, r1), (S_dual, r2) = sides
    lhs = (support_enumerator(S) * Fraction(1, code.size)
           + support_enumerator(S_dual) * Fraction(1, dual.size))
    partition = standard_basis_partition(code)
    d_set = partition.d
    rhs = RationalPoly.power_sum(list(range(1, code.n + 1)) + list(d_set), Fraction(q - 1, q))
    return SupportIdentityReport(lhs, rhs, d_set, (r1, r2), S, S_dual, partition.as_dict())


@dataclass(frozen=True)
class SelfDualReport:
    self_dual: bool
    criterion_holds: bool
    lhs: RationalPoly
    rhs: RationalPoly
    route: str

    @property
    def consistent(self) -> bool:
        """A self-dual code must satisfy the criterion; the converse is not required."""
        return self.criterion_holds or not self.self_dual


def verify_self_dual_criterion(code: LinearCode, enum_max: int = ENUM_MAX) -> SelfDualReport:
    """Compare ``S_C/|C|`` with ``(q-1)/(2q) (sum_i z^i + sum_{e_i not in C} z^i)``."""
    q = code.field.q
    S, route = support_distribution(code, enum_max)
    lhs = support_enumerator(S) * Fraction(1, code.size)
    outside = [i + 1 for i, flag in enumerate(basis_membership(code)) if not flag]
    rhs = RationalPoly.power_sum(list(range(1, code.n + 1)) + outside, Fraction(q - 1, 2 * q))
    return SelfDualReport(is_self_dual(code), lhs == rhs, lhs, rhs, route)
