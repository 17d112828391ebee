"""
Exceptions raised by the group engine.
"""

from typing import Any, Dict, Iterable, Optional


class VcsError(Exception):
    """Base class for every failure the engine reports."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": type(self).__name__,
            "message": self.message,
            "details": self.details,
        }


class BoundExceeded(VcsError):
    def __init__(self, bound: int):
        super().__init__(
            f"group closure exceeded the enumeration bound {bound}", {"bound": bound}
        )
        self.bound = bound


class InvalidGenerator(VcsError):
    pass


class NotNormal(VcsError):
    pass


class NotCoprime(VcsError):
    pass


class SearchExhausted(VcsError):
    pass


class SplittingIncomplete(VcsError):
    pass


class LiftInconsistent(VcsError):
    pass


class BadParams(VcsError):
    pass


class ActionNotHomomorphism(VcsError):
    pass


class FactorCountMismatch(VcsError):
    def __init__(self, expected: int, found: int):
        super().__init__(
            f"action needs {expected} module factors, found {found}",
            {"expected": expected, "found": found},
        )


class NotHallPair(VcsError):
    pass


class ParseError(VcsError):
    def __init__(self, line: int, column: int, expected: Iterable[str]):
        self.line = line
        self.column = column
        self.expected = sorted(set(expected))
        super().__init__(
            f"parse error at line {line}, column {column}; expected one of: "
            + ", ".join(self.expected),
            {"line": line, "column": column, "expected": self.expected},
        )
