"""Full analysis of one code, serialisable to JSON and text."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction

from .code import ENUM_MAX, LinearCode, min_distance
from .enumerator import (
    RationalPoly,
    macwilliams_transform,
    support_distribution_closed,
    support_distribution_enum,
    support_enumerator,
    total_weight_identity,
    verify_self_dual_criterion,
    verify_support_identity,
    weight_distribution,
    weight_enumerator,
)

HOLDS, FAILS, SKIPPED = "HOLDS", "FAILS", "SKIPPED"

VERDICT_ORDER = (
    "total_weight_identity",
    "support_closed_form",
    "support_enumerator_identity",
    "self_dual_criterion",
    "macwilliams_transform",
)


@dataclass
class Verdict:
    status: str
    reason: str | None = None

    def __str__(self) -> str:
        return f"{self.status}({self.reason})" if self.status == SKIPPED else self.status


def poly_to_pairs(poly: RationalPoly, length: int) -> list[list[int]]:
    """Coefficients for exponents ``0..length-1`` as ``[numerator, denominator]``."""
    return [[c.numerator, c.denominator] for c in poly.coefficient_list(length)]


def pairs_to_poly(pairs: list[list[int]]) -> RationalPoly:
    return RationalPoly.from_coeffs(Fraction(a, b) for a, b in pairs)


def _fmt_pairs(pairs: list[list[int]]) -> str:
    terms = []
    for e, (a, b) in enumerate(pairs):
        if a:
            c = str(a) if b == 1 else f"{a}/{b}"
            if e == 0:
                terms.append(c)
            else:
                terms.append(f"z^{e}" if c == "1" else f"{c}*z^{e}")
    return " + ".join(terms) or "0"


@dataclass
class AnalysisReport:
    field: dict
    n: int
    k: int
    d: int | None
    code_size: int
    weight_distribution: list[int] | None
    weight_enumerator: list[list[int]] | None
    support_distribution: list[int]
    support_route: str
    support_enumerator: list[list[int]]
    dual: dict
    partition: dict[str, list[int]]
    identity: dict
    self_dual: bool
    self_dual_check: dict
    verdicts: dict[str, Verdict]

    @property
    def exit_code(self) -> int:
        return 1 if any(v.status == FAILS for v in self.verdicts.values()) else 0

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> AnalysisReport:
        verdicts = {k: Verdict(**v) for k, v in data["verdicts"].items()}
        return cls(**{**data, "verdicts": verdicts})

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        f = self.field
        field_name = f"GF({f['p']})" if f["m"] == 1 else f"GF({f['p']}^{f['m']}) modulus {f['modulus']}"
        params = f"[{self.n},{self.k}" + (f",{self.d}]" if self.d is not None else "]")
        du = self.dual
        dparams = f"[{du['n']},{du['k']}" + (f",{du['d']}]" if du["d"] is not None else "]")
        lines = [
            f"code {params} over {field_name}, {self.code_size} codewords",
            f"weight distribution A_w: {self.weight_distribution if self.weight_distribution is not None else 'not enumerated'}",
            f"support distribution S_i ({self.support_route}): {self.support_distribution}",
            f"support enumerator S_C(z) = {_fmt_pairs(self.support_enumerator)}",
        ]
        if self.weight_enumerator is not None:
            lines.append(f"weight enumerator W_C(z) = {_fmt_pairs(self.weight_enumerator)}")
        lines += [
            f"dual code {dparams}, {du['code_size']} codewords",
            f"dual weight distribution: {du['weight_distribution'] if du['weight_distribution'] is not None else 'not enumerated'}",
            f"dual support distribution ({du['support_route']}): {du['support_distribution']}",
            "coordinate partition (1-based): " + ", ".join(f"{k}={v}" for k, v in self.partition.items()),
            f"identity lhs = {_fmt_pairs(self.identity['lhs'])}",
            f"identity rhs = {_fmt_pairs(self.identity['rhs'])}",
            f"self-dual: {'yes' if self.self_dual else 'no'}",
            f"self-dual criterion lhs = {_fmt_pairs(self.self_dual_check['lhs'])}",
            f"self-dual criterion rhs = {_fmt_pairs(self.self_dual_check['rhs'])}",
            "verdicts:",
        ]
        for name in VERDICT_ORDER:
            lines.append(f"  {name}: {self.verdicts[name]}")
        return "\n".join(lines) + "\n"


def _too_big(c: LinearCode, enum_max: int) -> str:
    return f"{c.size} codewords exceed enum-max {enum_max}"


def _side(c: LinearCode, enum_max: int) -> dict:
    enumerable = c.size <= enum_max
    if enumerable:
        S, route = support_distribution_enum(c, enum_max), "enum"
        W = weight_distribution(c, enum_max)
    else:
        S, route, W = support_distribution_closed(c), "closed", None
    return {
        "S": S,
        "route": route,
        "W": W,
        "d": min_distance(c, enum_max) if enumerable and c.k > 0 else None,
    }


def analyze(code: LinearCode, enum_max: int = ENUM_MAX) -> AnalysisReport:
    f = code.field
    dual = code.dual
    me, other = _side(code, enum_max), _side(dual, enum_max)
    verdicts: dict[str, Verdict] = {}

    if me["W"] is not None:
        t = total_weight_identity(code, enum_max)
        verdicts["total_weight_identity"] = Verdict(HOLDS if t.holds else FAILS,
                                                    None if t.holds else f"{t.lhs} != {t.rhs}")
        closed = support_distribution_closed(code)
        ok = closed == me["S"] and me["S"].dichotomy_holds(f.q, code.k)
        verdicts["support_closed_form"] = Verdict(HOLDS if ok else FAILS,
                                                  None if ok else f"closed form {list(closed.counts)}")
    else:
        verdicts["total_weight_identity"] = Verdict(SKIPPED, _too_big(code, enum_max))
        verdicts["support_closed_form"] = Verdict(SKIPPED, _too_big(code, enum_max))

    ident = verify_support_identity(code, enum_max, mode="auto")
    verdicts["support_enumerator_identity"] = Verdict(HOLDS if ident.holds else FAILS)

    sd = verify_self_dual_criterion(code, enum_max)
    if not sd.self_dual:
        verdicts["self_dual_criterion"] = Verdict(SKIPPED, "code is not self-dual")
    else:
        verdicts["self_dual_criterion"] = Verdict(HOLDS if sd.criterion_holds else FAILS)

    if me["W"] is not None and other["W"] is not None:
        T = macwilliams_transform(me["W"], f.q, code.n, code.size)
        ok = T == other["W"]
        verdicts["macwilliams_transform"] = Verdict(HOLDS if ok else FAILS,
                                                    None if ok else f"transform gave {list(T.counts)}")
    else:
        big = code if me["W"] is None else dual
        verdicts["macwilliams_transform"] = Verdict(SKIPPED, _too_big(big, enum_max))

    n = code.n
    return AnalysisReport(
        field={"p": f.p, "m": f.m, "q": f.q, "modulus": list(f.modulus)},
        n=n,
        k=code.k,
        d=me["d"],
        code_size=code.size,
        weight_distribution=list(me["W"].counts) if me["W"] is not None else None,
        weight_enumerator=poly_to_pairs(weight_enumerator(me["W"]), n + 1) if me["W"] is not None else None,
        support_distribution=list(me["S"].counts),
        support_route=me["route"],
        support_enumerator=poly_to_pairs(support_enumerator(me["S"]), n + 1),
        dual={
            "n": n,
            "k": dual.k,
            "d": other["d"],
            "code_size": dual.size,
            "weight_distribution": list(other["W"].counts) if other["W"] is not None else None,
            "support_distribution": list(other["S"].counts),
            "support_route": other["route"],
            "support_enumerator": poly_to_pairs(support_enumerator(other["S"]), n + 1),
        },
        partition=ident.partition,
        identity={
            "lhs": poly_to_pairs(ident.lhs, n + 1),
            "rhs": poly_to_pairs(ident.rhs, n + 1),
            "d": list(ident.partition_d),
        },
        self_dual=sd.self_dual,
        self_dual_check={
            "criterion_holds": sd.criterion_holds,
            "lhs": poly_to_pairs(sd.lhs, n + 1),
            "rhs": poly_to_pairs(sd.rhs, n + 1),
        },
        verdicts=verdicts,
    )
