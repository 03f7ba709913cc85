"""Seeded random-code sampling that runs every identity as a property.

Each trial draws its code from a generator keyed by ``(seed, trial index)``,
so trials are independent of each other and the report is reproducible
byte for byte. Failing codes are shrunk by greedily deleting generator rows
and columns while the failure persists.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .charsum import scan_lemma
from .code import LinearCode, code_from_generator, is_self_dual
from .enumerator import (
    macwilliams_transform,
    support_distribution_closed,
    support_distribution_enum,
    total_weight_identity,
    verify_self_dual_criterion,
    verify_support_identity,
    weight_distribution,
)
from .errors import CodeSupportError
from .families import self_dual_fixtures
from .field import FieldSpec, gf

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 0
    trials: int = 100
    fields: tuple[FieldSpec, ...] = dc_field(default_factory=lambda: (gf(2), gf(3), gf(4)))
    n_range: tuple[int, int] = (1, 8)
    k_range: tuple[int, int] | None = None
    enum_cap: int = 1 << 16
    lemma_max: int = 1 << 10
    inject_fixtures: bool = True

    def __post_init__(self):
        object.__setattr__(self, "fields", tuple(self.fields))
        lo, hi = self.n_range
        if lo < 1 or hi < lo:
            raise ValueError(f"invalid length range {self.n_range}")
        if self.k_range is None:
            object.__setattr__(self, "k_range", (0, hi))
        klo, khi = self.k_range
        if klo < 0 or khi < klo or khi > hi:
            raise ValueError(f"dimension range {self.k_range} must lie within [0, {hi}]")
        if self.trials < 0:
            raise ValueError("trials must be non-negative")
        if not self.fields:
            raise ValueError("field pool is empty")
        if self.enum_cap < 1:
            raise ValueError("enum_cap must be positive")


@dataclass(frozen=True)
class Sample:
    label: str
    field: FieldSpec
    matrix: tuple[tuple[int, ...], ...]
    code: LinearCode

    @property
    def rows_requested(self) -> int:
        return len(self.matrix)


def _rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed % (1 << 64), index]))


def sample_code(cfg: FuzzConfig, index: int) -> Sample:
    """Uniform random generator matrix for trial ``index``; rank may fall short."""
    rng = _rng(cfg.seed, index)
    field = cfg.fields[int(rng.integers(len(cfg.fields)))]
    n = int(rng.integers(cfg.n_range[0], cfg.n_range[1] + 1))
    k = int(rng.integers(cfg.k_range[0], min(cfg.k_range[1], n) + 1))
    while k > 0 and field.q**k > cfg.enum_cap:
        k -= 1
    M = rng.integers(0, field.q, size=(k, n))
    matrix = tuple(tuple(int(x) for x in row) for row in M)
    return Sample(f"trial {index}", field, matrix, code_from_generator(matrix, field, n=n))


# properties: return (outcome, detail)

Check = Callable[[LinearCode, FuzzConfig], tuple[str, str]]


def _total_weight(code: LinearCode, cfg: FuzzConfig) -> tuple[str, str]:
    if code.size > cfg.enum_cap:
        return SKIP, "code too large to enumerate"
    t = total_weight_identity(code, cfg.enum_cap)
    return (PASS, "") if t.holds else (FAIL, f"sum S_i = {t.lhs} but sum w A_w = {t.rhs}")


def _support_closed_form(code: LinearCode, cfg: FuzzConfig) -> tuple[str, str]:
    if code.size > cfg.enum_cap:
        return SKIP, "code too large to enumerate"
    enum = support_distribution_enum(code, cfg.enum_cap)
    closed = support_distribution_closed(code)
    if enum != closed:
        return FAIL, f"enumerated {list(enum.counts)} but closed form {list(closed.counts)}"
    if not enum.dichotomy_holds(code.field.q, code.k):
        return FAIL, f"support count outside {{0, (q-1)q^(k-1)}}: {list(enum.counts)}"
    return PASS, ""


def _support_identity(code: LinearCode, cfg: FuzzConfig) -> tuple[str, str]:
    report = verify_support_identity(code, cfg.enum_cap, mode="auto")
    if not report.holds:
        return FAIL, f"lhs {report.lhs!r} != rhs {report.rhs!r} (D = {list(report.partition_d)})"
    q = code.field.q
    allowed = {Fraction(0), Fraction(q - 1, q), Fraction(2 * (q - 1), q)}
    bad = [c for c in report.lhs.coefficient_list(code.n + 1) if c not in allowed]
    if bad:
        return FAIL, f"normalised coefficient {bad[0]} outside {sorted(allowed)}"
    return PASS, ""


def _lemma(code: LinearCode, cfg: FuzzConfig) -> tuple[str, str]:
    if code.field.q**code.n > cfg.lemma_max or code.size > cfg.enum_cap:
        return SKIP, "space too large for an exhaustive scan"
    scan = scan_lemma(code, enum_max=cfg.enum_cap)
    if scan.holds:
        return PASS, ""
    u, got, want = scan.failures[0]
    return FAIL, f"S({list(u)}) = {got!r}, expected {want!r}"


def _macwilliams(code: LinearCode, cfg: FuzzConfig) -> tuple[str, str]:
    dual = code.dual
    if code.size > cfg.enum_cap or dual.size > cfg.enum_cap:
        return SKIP, "code or dual too large to enumerate"
    q = code.field.q
    W = weight_distribution(code, cfg.enum_cap)
    W_dual = weight_distribution(dual, cfg.enum_cap)
    T = macwilliams_transform(W, q, code.n, code.size)
    if T != W_dual:
        return FAIL, f"transform {list(T.counts)} != dual distribution {list(W_dual.counts)}"
    back = macwilliams_transform(T, q, code.n, dual.size)
    if back != W:
        return FAIL, f"double transform {list(back.counts)} != {list(W.counts)}"
    return PASS, ""


def _self_dual_criterion(code: LinearCode, cfg: FuzzConfig) -> tuple[str, str]:
    if not is_self_dual(code):
        return SKIP, "not self-dual"
    report = verify_self_dual_criterion(code, cfg.enum_cap)
    if not report.criterion_holds:
        return FAIL, f"lhs {report.lhs!r} != rhs {report.rhs!r}"
    return PASS, ""


@dataclass(frozen=True)
class Property:
    name: str
    check: Check


DEFAULT_PROPERTIES: tuple[Property, ...] = (
    Property("total_weight_identity", _total_weight),
    Property("support_closed_form", _support_closed_form),
    Property("support_enumerator_identity", _support_identity),
    Property("character_sum_lemma", _lemma),
    Property("macwilliams_transform", _macwilliams),
    Property("self_dual_criterion", _self_dual_criterion),
)


def _run_check(prop: Property, code: LinearCode, cfg: FuzzConfig) -> tuple[str, str]:
    try:
        return prop.check(code, cfg)
    except (CodeSupportError, AssertionError, ArithmeticError, ValueError) as exc:
        return FAIL, f"{type(exc).__name__}: {exc}"


def shrink(prop: Property, field: FieldSpec, matrix: Sequence[Sequence[int]], n: int,
           cfg: FuzzConfig) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Greedy row then column deletion, keeping each step only if it still fails.

    Returns the shrunk generator rows and the shrunk length.
    """
    rows = [list(r) for r in matrix]

    def fails(candidate: list[list[int]], length: int) -> bool:
        code = code_from_generator(candidate, field, n=length)
        return _run_check(prop, code, cfg)[0] == FAIL

    changed = True
    while changed:
        changed = False
        for i in range(len(rows)):
            candidate = rows[:i] + rows[i + 1:]
            if fails(candidate, n):
                rows, changed = candidate, True
                break
        if changed or n == 1:
            continue
        for j in range(n):
            candidate = [r[:j] + r[j + 1:] for r in rows]
            if fails(candidate, n - 1):
                rows, n, changed = candidate, n - 1, True
                break
    return tuple(tuple(r) for r in rows), n


@dataclass
class Counterexample:
    label: str
    field: str
    length: int
    message: str
    generator: list[list[int]]
    shrunk: list[list[int]]
    shrunk_length: int


@dataclass
class PropertyResult:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    first_failure: Counterexample | None = None


@dataclass
class FuzzReport:
    seed: int
    trials: int
    fields: list[str]
    n_range: list[int]
    k_range: list[int]
    enum_cap: int
    codes: int
    rank_deficient: int
    properties: list[PropertyResult]
    self_dual_pairs: dict[str, int]

    @property
    def ok(self) -> bool:
        return all(p.failed == 0 for p in self.properties)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> FuzzReport:
        props = []
        for p in data["properties"]:
            p = dict(p)
            if p["first_failure"] is not None:
                p["first_failure"] = Counterexample(**p["first_failure"])
            props.append(PropertyResult(**p))
        return cls(**{**data, "properties": props})

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [
            f"fuzz seed={self.seed} trials={self.trials} fields={','.join(self.fields)} "
            f"n={self.n_range[0]}..{self.n_range[1]} k={self.k_range[0]}..{self.k_range[1]} "
            f"enum_cap={self.enum_cap}",
            f"codes checked: {self.codes} (rank-deficient samples: {self.rank_deficient})",
        ]
        for p in self.properties:
            status = "FAIL" if p.failed else "ok"
            lines.append(f"  {status:4} {p.name}: passed={p.passed} failed={p.failed} skipped={p.skipped}")
            cx = p.first_failure
            if cx is not None:
                lines.append(f"       first failure: {cx.label} over {cx.field}, n={cx.length}: {cx.message}")
                lines.append(f"       generator: {cx.generator}")
                lines.append(f"       shrunk (n={cx.shrunk_length}): {cx.shrunk}")
        pairs = ", ".join(f"{k}: {v}" for k, v in sorted(self.self_dual_pairs.items()))
        lines.append(f"self-dual/criterion pairs: {pairs or 'none'}")
        lines.append("RESULT: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines) + "\n"


def _samples(cfg: FuzzConfig):
    for i in range(cfg.trials):
        yield sample_code(cfg, i)
    if cfg.inject_fixtures and cfg.trials > 0:
        for name, code in self_dual_fixtures().items():
            matrix = tuple(tuple(r) for r in code.gen.tolist())
            yield Sample(f"fixture {name}", code.field, matrix, code)


def run_suite(cfg: FuzzConfig, properties: Sequence[Property] = DEFAULT_PROPERTIES) -> FuzzReport:
    results = [PropertyResult(p.name) for p in properties]
    pairs: dict[str, int] = {}
    codes = deficient = 0
    for sample in _samples(cfg):
        codes += 1
        code = sample.code
        if code.k < sample.rows_requested:
            deficient += 1
        for prop, res in zip(properties, results):
            outcome, detail = _run_check(prop, code, cfg)
            if outcome == PASS:
                res.passed += 1
            elif outcome == SKIP:
                res.skipped += 1
            else:
                res.failed += 1
                if res.first_failure is None:
                    shrunk, shrunk_n = shrink(prop, sample.field, sample.matrix, code.n, cfg)
                    res.first_failure = Counterexample(
                        label=sample.label,
                        field=repr(sample.field),
                        length=code.n,
                        message=detail,
                        generator=[list(r) for r in sample.matrix],
                        shrunk=[list(r) for r in shrunk],
                        shrunk_length=shrunk_n,
                    )
        if code.size <= cfg.enum_cap:
            sd = verify_self_dual_criterion(code, cfg.enum_cap)
            key = f"self_dual={sd.self_dual} criterion={sd.criterion_holds}"
            pairs[key] = pairs.get(key, 0) + 1
    return FuzzReport(
        seed=cfg.seed,
        trials=cfg.trials,
        fields=[repr(f) for f in cfg.fields],
        n_range=list(cfg.n_range),
        k_range=list(cfg.k_range),
        enum_cap=cfg.enum_cap,
        codes=codes,
        rank_deficient=deficient,
        properties=results,
        self_dual_pairs=pairs,
    )

