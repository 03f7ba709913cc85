"""Acceptance criteria, each checked at its stated tolerance and time budget.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py`` for one PASS/FAIL line per criterion.
"""

from __future__ import annotations

import contextlib
import io
import itertools
import subprocess
import sys
import time
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import pytest

from codesupport.charsum import scan_lemma
from codesupport.cli import run
from codesupport.code import LinearCode, code_from_generator, codewords, is_self_dual
from codesupport.codefile import parse_code_file
from codesupport.enumerator import (
    RationalPoly,
    macwilliams_transform,
    support_distribution_closed,
    support_distribution_enum,
    support_enumerator,
    total_weight_identity,
    verify_self_dual_criterion,
    verify_support_identity,
    weight_distribution,
)
from codesupport.families import extended_hamming_8_4, hamming, repetition, self_dual_fixtures, simplex
from codesupport.field import gf
from codesupport.fuzz import FuzzConfig, sample_code

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
RESULT_LINES: list[str] = []

SIMPLEX_TABLE = ["0000000", "0010111", "0101011", "0111100",
                 "1001101", "1011010", "1100110", "1110001"]
HAMMING_TABLE = ["0000000", "0001111", "0010011", "0011100", "0100101", "0101010",
                 "0110110", "0111001", "1000110", "1001001", "1010101", "1011010",
                 "1100011", "1101100", "1110000", "1111111"]


def z_sum(n: int, coeff=1) -> RationalPoly:
    return RationalPoly.power_sum(range(1, n + 1), coeff)


def load(name: str) -> LinearCode:
    return parse_code_file((FIXTURES / f"{name}.code").read_text()).code()


def bits(words) -> list[str]:
    return ["".join(map(str, w)) for w in words]


def record(number: int, title: str, budget: float, body) -> None:
    start = time.perf_counter()
    error = None
    try:
        body()
    except AssertionError as exc:
        error = exc
    elapsed = time.perf_counter() - start
    ok = error is None and elapsed < budget
    why = "" if ok else (f": {error}" if error is not None else f": over budget {budget}s")
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d} {title} ({elapsed:.2f}s / {budget:g}s){why}"
    RESULT_LINES.append(line)
    print(line)
    assert error is None, error
    assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"


@lru_cache(maxsize=None)
def random_codes(count: int = 1000, seed: int = 20240601) -> tuple[LinearCode, ...]:
    cfg = FuzzConfig(seed=seed, trials=count, fields=(gf(2), gf(3), gf(4), gf(5)),
                     n_range=(1, 10), k_range=(0, 10), enum_cap=1 << 16)
    return tuple(sample_code(cfg, i).code for i in range(count))


def _total_weight_holds(code: LinearCode) -> None:
    t = total_weight_identity(code)
    assert t.holds, f"total weight {t.lhs} != {t.rhs} for {code!r}"


# 1 ------------------------------------------------------------------------

def criterion_1():
    G, H = load("simplex_7_3"), load("hamming_7_4")
    assert bits(codewords(G)) == SIMPLEX_TABLE
    assert bits(codewords(H)) == HAMMING_TABLE
    assert support_distribution_enum(G).counts == (4,) * 7
    assert support_distribution_enum(H).counts == (8,) * 7
    assert support_distribution_enum(G.dual).counts == (8,) * 7
    report = verify_support_identity(G, mode="enum")
    assert report.lhs == z_sum(7) and report.rhs == z_sum(7)
    # the printed pair, combined as in the worked example
    pair = support_enumerator(support_distribution_enum(G)) * Fraction(1, G.size) \
        + support_enumerator(support_distribution_enum(H)) * Fraction(1, H.size)
    assert pair == z_sum(7)


def test_criterion_1_simplex_hamming_pair():
    record(1, "simplex/Hamming [7,3]/[7,4] worked example", 1.0, criterion_1)


# 2 ------------------------------------------------------------------------

def criterion_2():
    C = load("repetition_3_1")
    assert C == repetition(gf(2), 3)
    assert support_enumerator(support_distribution_enum(C)) == z_sum(3)
    assert support_enumerator(support_distribution_enum(C.dual)) == z_sum(3, 2)
    report = verify_support_identity(C, mode="enum")
    assert report.lhs == z_sum(3) and report.rhs == z_sum(3)


def test_criterion_2_repetition():
    record(2, "repetition [3,1,3]", 1.0, criterion_2)


# 3 ------------------------------------------------------------------------

def criterion_3():
    C = load("extended_hamming_8_4")
    assert C == extended_hamming_8_4()
    assert is_self_dual(C)
    assert support_distribution_enum(C).counts == (8,) * 8
    report = verify_self_dual_criterion(C)
    half = z_sum(8, Fraction(1, 2))
    assert report.self_dual and report.criterion_holds
    assert report.lhs == half and report.rhs == half


def test_criterion_3_extended_hamming():
    record(3, "extended Hamming [8,4,4] self-dual criterion", 1.0, criterion_3)


# 4 ------------------------------------------------------------------------

SIMPLEX_PARAMS = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (5, 2)]


def criterion_4():
    for q, m in SIMPLEX_PARAMS:
        C = simplex(gf(q), m)
        S = support_distribution_enum(C)
        assert S.counts == (q ** (m - 1) * (q - 1),) * C.n, (q, m, S.counts)
        _total_weight_holds(C)


def test_criterion_4_simplex_closed_form():
    record(4, "simplex S_i = q^(m-1)(q-1), 7 parameter pairs", 10.0, criterion_4)


# 5 ------------------------------------------------------------------------

def criterion_5():
    codes = random_codes()
    assert len(codes) >= 1000
    for C in codes:
        q, k = C.field.q, C.k
        assert q in (2, 3, 4, 5) and C.n <= 10 and q**k <= 1 << 16
        closed, enum = support_distribution_closed(C), support_distribution_enum(C)
        assert closed == enum, (C, closed, enum)
        allowed = {0, (q - 1) * q ** (k - 1)} if k else {0}
        assert set(enum.counts) <= allowed, (C, enum)
        _total_weight_holds(C)


def test_criterion_5_closed_form_equals_enumeration():
    record(5, "closed-form support = enumerated on 1000 random codes", 60.0, criterion_5)


# 6 ------------------------------------------------------------------------

def criterion_6():
    for C in random_codes():
        q = C.field.q
        report = verify_support_identity(C, mode="enum")
        assert report.holds, C
        allowed = {Fraction(0), Fraction(q - 1, q), Fraction(2 * (q - 1), q)}
        assert set(report.lhs.coefficient_list(C.n + 1)) <= allowed, (C, report.lhs)
        _total_weight_holds(C.dual)


def test_criterion_6_support_identity():
    record(6, "support enumerator identity on 1000 random codes", 60.0, criterion_6)


# 7 ------------------------------------------------------------------------

def criterion_7():
    codes = random_codes()[:600]
    checked = 0
    for C in codes:
        if C.dual.size > 1 << 16:
            continue
        q = C.field.q
        W, Wd = weight_distribution(C), weight_distribution(C.dual)
        T = macwilliams_transform(W, q, C.n, C.size)
        assert T == Wd, C
        assert macwilliams_transform(T, q, C.n, C.dual.size) == W, C
        assert W.total_weight() == support_distribution_enum(C).total
        checked += 1
    assert checked >= 500, checked


def test_criterion_7_macwilliams():
    record(7, "MacWilliams transform and double transform on >= 500 codes", 60.0, criterion_7)


# 8 ------------------------------------------------------------------------

def all_subspaces(field, n):
    """Every subspace of GF(q)^n, one RREF generator each."""
    q = field.q
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            free = [(r, c) for r in range(k) for c in range(pivots[r] + 1, n) if c not in pivots]
            for values in itertools.product(range(q), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for r, c in enumerate(pivots):
                    rows[r][c] = 1
                for (r, c), v in zip(free, values):
                    rows[r][c] = v
                yield code_from_generator(rows, field, n=n)


# exhaustive over all subspaces where that is small; seeded samples elsewhere
EXHAUSTIVE_SPACES = [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 1), (3, 2), (3, 3), (3, 4),
                     (4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (5, 3), (7, 2), (8, 2), (9, 2)]
SUBSPACE_COUNTS = {(2, 4): 67, (2, 6): 2825, (3, 3): 28, (4, 3): 44}


def lemma_codes():
    for q, n in EXHAUSTIVE_SPACES:
        yield from all_subspaces(gf(q), n)
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 25, 27, 32, 64):
        n_max = max(n for n in range(1, 13) if q**n <= 1 << 12)
        cfg = FuzzConfig(seed=q, trials=40, fields=(gf(q),), n_range=(1, n_max), enum_cap=1 << 12)
        for i in range(cfg.trials):
            yield sample_code(cfg, i).code
    yield load("simplex_7_3")
    yield load("hamming_7_4")
    yield load("repetition_3_1")
    yield load("extended_hamming_8_4")
    yield from (C for C in self_dual_fixtures().values() if C.field.q ** C.n <= 1 << 12)
    yield hamming(gf(2), 3)


def criterion_8():
    for (q, n), expected in SUBSPACE_COUNTS.items():
        assert sum(1 for _ in all_subspaces(gf(q), n)) == expected
    count = 0
    for C in lemma_codes():
        q = C.field.q
        assert q**C.n <= 1 << 12
        scan = scan_lemma(C)
        assert scan.checked == q**C.n
        assert scan.in_dual == q ** (C.n - C.k)
        assert scan.holds, (C, scan.failures[:3])
        count += 1
    assert count > 3000, count


def test_criterion_8_lemma_exhaustive():
    record(8, "character-sum lemma over every u, q^n <= 2^12", 30.0, criterion_8)


# 9 ------------------------------------------------------------------------

def criterion_9():
    for C in random_codes():
        _total_weight_holds(C)
    for q, m in SIMPLEX_PARAMS:
        _total_weight_holds(simplex(gf(q), m))
    for name in ("simplex_7_3", "hamming_7_4", "repetition_3_1", "extended_hamming_8_4"):
        _total_weight_holds(load(name))


def test_criterion_9_total_weight():
    record(9, "sum S_i = sum w A_w on every suite", 60.0, criterion_9)


# 10 -----------------------------------------------------------------------

def _cli(argv, stdin=None) -> str:
    proc = subprocess.run([sys.executable, "-m", "codesupport", *argv], input=stdin,
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


def criterion_10():
    flags = ["fuzz", "--seed", "7", "--trials", "150", "--fields", "2,3,4,5", "--n-max", "8"]
    first, second = _cli(flags), _cli(flags)
    assert first == second and first.endswith("RESULT: PASS\n")
    assert _cli(flags + ["--json"]) == _cli(flags + ["--json"])
    for name in ("simplex_7_3", "hamming_7_4", "repetition_3_1", "extended_hamming_8_4"):
        original = (FIXTURES / f"{name}.code").read_text()
        twice = _cli(["dual", "-"], stdin=_cli(["dual", "-"], stdin=original))
        canonical = load(name).gen.tolist()
        assert [list(r) for r in parse_code_file(twice).rows] == canonical, name
    with contextlib.redirect_stdout(io.StringIO()) as buf:
        assert run(["fuzz", "--trials", "0", "--json"]) == 0
    assert '"codes": 0' in buf.getvalue()


def test_criterion_10_determinism():
    record(10, "fuzz byte-identical across runs; dual twice is canonical", 60.0, criterion_10)


if __name__ == "__main__":
    failed = 0
    for fn in [test_criterion_1_simplex_hamming_pair, test_criterion_2_repetition,
               test_criterion_3_extended_hamming, test_criterion_4_simplex_closed_form,
               test_criterion_5_closed_form_equals_enumeration, test_criterion_6_support_identity,
               test_criterion_7_macwilliams, test_criterion_8_lemma_exhaustive,
               test_criterion_9_total_weight, test_criterion_10_determinism]:
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
