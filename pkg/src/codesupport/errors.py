"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class CodeSupportError(Exception):
    """Base class for all errors raised by :mod:`codesupport`."""


class NonPrimeCharacteristic(CodeSupportError, ValueError):
    pass


class ReducibleModulus(CodeSupportError, ValueError):
    pass


class UnsupportedField(CodeSupportError, ValueError):
    pass


class FieldTooLarge(CodeSupportError, ValueError):
    pass


class FieldMismatch(CodeSupportError, ValueError):
    pass


class DivisionByZero(CodeSupportError, ZeroDivisionError):
    pass


class DimensionMismatch(CodeSupportError, ValueError):
    pass


class EnumerationTooLarge(CodeSupportError, RuntimeError):
    """Raised instead of starting an enumeration of more than ``enum_max`` words."""

    def __init__(self, size: int, enum_max: int):
        super().__init__(f"refusing to enumerate {size} codewords (limit {enum_max})")
        self.size = size
        self.enum_max = enum_max


class ZeroCode(CodeSupportError, ValueError):
    pass


class NonIntegralTransform(CodeSupportError, ValueError):
    pass


class UnsupportedParameters(CodeSupportError, ValueError):
    pass


class UnknownFamily(CodeSupportError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown family"


class ParseError(CodeSupportError, ValueError):
    """Malformed code file; carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
