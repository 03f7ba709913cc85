"""Brute-force reference implementations used only by the tests.

Nothing here touches the package's lookup tables or row reduction: field
arithmetic is schoolbook polynomial arithmetic on digit lists, codes are
plain Python sets built with itertools.
"""

from __future__ import annotations

import itertools
from collections import Counter


class BruteField:
    def __init__(self, p: int, modulus: tuple[int, ...] = ()):
        self.p = p
        self.modulus = tuple(modulus)  # low-to-high, monic; empty for prime fields
        self.m = max(1, len(self.modulus) - 1)
        self.q = p**self.m

    def digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.m)]

    def index(self, digits) -> int:
        return sum(d * self.p**i for i, d in enumerate(digits))

    def add(self, a: int, b: int) -> int:
        return self.index([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        prod = [0] * (2 * self.m)
        for i, x in enumerate(self.digits(a)):
            for j, y in enumerate(self.digits(b)):
                prod[i + j] += x * y
        # reduce from the top using x^m = -(lower terms of modulus)
        for deg in range(len(prod) - 1, self.m - 1, -1):
            c = prod[deg] % self.p
            prod[deg] = 0
            for i in range(self.m):
                prod[deg - self.m + i] -= c * self.modulus[i]
        return self.index([c % self.p for c in prod[: self.m]])

    def power(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def trace(self, a: int) -> int:
        t = 0
        for j in range(self.m):
            t = self.add(t, self.power(a, self.p**j))
        return t

    def dot(self, u, v) -> int:
        acc = 0
        for x, y in zip(u, v):
            acc = self.add(acc, self.mul(x, y))
        return acc

    def scale(self, lam: int, v) -> tuple[int, ...]:
        return tuple(self.mul(lam, x) for x in v)

    def vadd(self, u, v) -> tuple[int, ...]:
        return tuple(self.add(x, y) for x, y in zip(u, v))


def poly_has_root(coeffs, p: int) -> bool:
    return any(sum(c * x**i for i, c in enumerate(coeffs)) % p == 0 for x in range(p))


def span(F: BruteField, rows, n: int) -> set[tuple[int, ...]]:
    words = set()
    for msg in itertools.product(range(F.q), repeat=len(rows)):
        w = (0,) * n
        for lam, row in zip(msg, rows):
            w = F.vadd(w, F.scale(lam, row))
        words.add(w)
    return words


def all_vectors(F: BruteField, n: int):
    return itertools.product(range(F.q), repeat=n)


def dual_by_search(F: BruteField, words, n: int) -> set[tuple[int, ...]]:
    words = list(words)
    return {v for v in all_vectors(F, n) if all(F.dot(v, c) == 0 for c in words)}


def weight_counts(words, n: int) -> list[int]:
    c = Counter(sum(1 for x in w if x) for w in words)
    return [c.get(i, 0) for i in range(n + 1)]


def support_counts(words, n: int) -> list[int]:
    return [sum(1 for w in words if w[i]) for i in range(n)]
