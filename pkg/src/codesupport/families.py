"""Constructors for the classical codes used as fixtures."""

from __future__ import annotations

import itertools

import numpy as np

from .code import ENUM_MAX, LinearCode, code_from_generator, codeword_blocks, is_self_dual, min_distance
from .errors import UnknownFamily, UnsupportedParameters
from .field import FieldSpec, field_new
from .linalg import MatrixFq

# Constructors enumerate their result to self-check only below this size.
SELF_CHECK_MAX = 1 << 16


def projective_points(field: FieldSpec, m: int) -> list[tuple[int, ...]]:
    """One vector per 1-dimensional subspace of GF(q)^m, in lexicographic order.

    The representative is the lexicographically smallest nonzero multiple,
    i.e. the one whose first nonzero entry is 1.
    """
    points = []
    for v in itertools.product(range(field.q), repeat=m):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            points.append(v)
    return points


def simplex(field: FieldSpec, m: int) -> LinearCode:
    """The ``[(q^m-1)/(q-1), m, q^(m-1)]`` simplex code."""
    if m < 2:
        raise UnsupportedParameters(f"simplex codes need m >= 2, got {m}")
    if field.q**m > ENUM_MAX:
        raise UnsupportedParameters(f"q^m = {field.q ** m} exceeds the enumeration limit")
    columns = projective_points(field, m)
    gen = MatrixFq(field, np.array(columns, dtype=np.int64).T)
    code = code_from_generator(gen)
    if code.k != m:
        raise AssertionError("simplex generator lost rank")
    if code.size <= SELF_CHECK_MAX:
        target = field.q ** (m - 1)
        for blk in codeword_blocks(code):
            w = np.count_nonzero(blk, axis=1)
            if np.any((w != 0) & (w != target)):
                raise AssertionError("simplex code has a nonzero word of the wrong weight")
    return code


def hamming(field: FieldSpec, m: int) -> LinearCode:
    """The ``[n, n-m, 3]`` Hamming code: dual of :func:`simplex`."""
    code = simplex(field, m).dual
    if code.size <= SELF_CHECK_MAX and min_distance(code) != 3:
        raise AssertionError("Hamming code without minimum distance 3")
    return code


def repetition(field: FieldSpec, n: int) -> LinearCode:
    if n < 1:
        raise UnsupportedParameters(f"repetition codes need n >= 1, got {n}")
    return code_from_generator([[1] * n], field)


EXTENDED_HAMMING_8_4_GENERATOR = (
    (1, 1, 1, 1, 0, 0, 0, 0),
    (1, 1, 0, 0, 1, 1, 0, 0),
    (1, 0, 1, 0, 1, 0, 1, 0),
    (1, 1, 1, 1, 1, 1, 1, 1),
)


def extended_hamming_8_4() -> LinearCode:
    """The binary self-dual ``[8, 4, 4]`` extended Hamming code."""
    code = code_from_generator(EXTENDED_HAMMING_8_4_GENERATOR, field_new(2))
    if not is_self_dual(code):
        raise AssertionError("extended Hamming code is not self-dual")
    return code


def self_dual_fixtures() -> dict[str, LinearCode]:
    """Small self-dual codes over several fields, keyed by a short name."""
    return {
        "ext-hamming-8-4": extended_hamming_8_4(),
        "gf2-[2,1]": code_from_generator([[1, 1]], field_new(2)),
        "gf4-[2,1]": code_from_generator([[1, 1]], field_new(2, 2)),
        "gf5-[2,1]": code_from_generator([[1, 2]], field_new(5)),
        "tetracode-[4,2]": simplex(field_new(3), 2),
    }


FAMILIES = ("simplex", "hamming", "repetition", "extended-hamming-8-4")


def build_family(name: str, field: FieldSpec | None = None, m: int | None = None,
                 n: int | None = None) -> LinearCode:
    """Dispatch by family name, as used by the command line."""
    name = name.replace("_", "-")
    if name not in FAMILIES:
        raise UnknownFamily(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    if name == "extended-hamming-8-4":
        return extended_hamming_8_4()
    if field is None:
        raise UnsupportedParameters(f"family {name} needs a field")
    if name == "repetition":
        if n is None:
            raise UnsupportedParameters("repetition needs a length n")
        return repetition(field, n)
    if m is None:
        raise UnsupportedParameters(f"{name} needs a dimension parameter m")
    return simplex(field, m) if name == "simplex" else hamming(field, m)
