"""Exception hierarchy shared across the package."""

from __future__ import annotations


class NekboundError(Exception):
    """Base class for every error raised by nekbound."""


class ZeroDiagonal(NekboundError, ValueError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"diagonal entry {index} is zero; row-sum recursion undefined")


class NotSDD(NekboundError, ValueError):
    """Varah's bound was requested for a matrix that is not strictly diagonally dominant."""


class NotNekrasov(NekboundError, ValueError):
    """A Nekrasov bound was requested for a matrix that is not Nekrasov."""


class Singular(NekboundError, ArithmeticError):
    """The matrix has no inverse to working precision."""


class ParseError(NekboundError, ValueError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class NotSquare(NekboundError, ValueError):
    pass


class UnsupportedFormat(NekboundError, ValueError):
    pass


class UnknownName(NekboundError, KeyError):
    def __str__(self) -> str:
        return f"unknown builtin matrix {self.args[0]!r}"
