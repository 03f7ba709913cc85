"""Plain-text generator-matrix files.

Format (UTF-8, LF or CRLF line endings)::

    # comments run from '#' to the end of the line
    field 2 3 1 1 0 1      # p, m, then optional modulus coefficients
    length 7               # optional; required when there are no rows
    1 0 0 1 1 0 1          # one generator row per line, element indices

Modulus coefficients run from the constant term upwards; the leading 1 may
be given or left out. Blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .code import LinearCode, code_from_generator
from .errors import CodeSupportError, ParseError
from .field import FieldSpec, field_new
from .linalg import MatrixFq


@dataclass(frozen=True)
class CodeFile:
    field: FieldSpec
    n: int
    rows: tuple[tuple[int, ...], ...]

    def matrix(self) -> MatrixFq:
        return MatrixFq(self.field, self.rows, cols=self.n)

    def code(self) -> LinearCode:
        return code_from_generator(self.matrix())


def _tokens(line: str) -> list[tuple[int, str]]:
    # (1-based column, token) pairs
    out, col = [], 0
    for tok in line.split():
        col = line.index(tok, col)
        out.append((col + 1, tok))
        col += len(tok)
    return out


def _int(tok: str, lineno: int, col: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer {what}, got {tok!r}", lineno, col) from None


def parse_code_file(text: str) -> CodeFile:
    field: FieldSpec | None = None
    n: int | None = None
    rows: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r").split("#", 1)[0]
        if not line.strip():
            continue
        toks = _tokens(line)
        if field is None:
            if toks[0][1] != "field":
                raise ParseError("first line must be 'field p m [modulus...]'", lineno, toks[0][0])
            if len(toks) < 3:
                raise ParseError("field line needs p and m", lineno, len(line) + 1)
            nums = [_int(t, lineno, c, "in field line") for c, t in toks[1:]]
            try:
                field = field_new(nums[0], nums[1], nums[2:] or None)
            except CodeSupportError as exc:
                raise ParseError(str(exc), lineno, toks[1][0]) from exc
            continue
        if toks[0][1] == "length":
            if rows or n is not None or len(toks) != 2:
                raise ParseError("'length N' must appear once, before the rows", lineno, toks[0][0])
            n = _int(toks[1][1], lineno, toks[1][0], "length")
            if n < 1:
                raise ParseError("length must be positive", lineno, toks[1][0])
            continue
        if n is not None and len(toks) != n:
            raise ParseError(f"row has {len(toks)} entries, expected {n}", lineno, 1)
        row = []
        for col, tok in toks:
            x = _int(tok, lineno, col, "entry")
            if not 0 <= x < field.q:
                raise ParseError(f"entry {x} is not an element index of {field!r}", lineno, col)
            row.append(x)
        n = len(row)
        rows.append(tuple(row))
    if field is None:
        raise ParseError("missing 'field' header", 1, 1)
    if n is None:
        raise ParseError("no rows and no 'length' line; the code length is unknown", 1, 1)
    return CodeFile(field, n, tuple(rows))


def format_code_file(code: LinearCode, comment: str | None = None) -> str:
    f = code.field
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    header = f"field {f.p} {f.m}"
    if f.m > 1:
        header += " " + " ".join(str(c) for c in f.modulus)
    lines.append(header)
    lines.append(f"length {code.n}")
    lines.extend(" ".join(str(x) for x in row) for row in code.gen.tolist())
    return "\n".join(lines) + "\n"
