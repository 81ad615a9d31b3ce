"""Exception hierarchy shared by every stage of the pipeline."""

from __future__ import annotations


class SbeError(Exception):
    """Base class for all errors raised by :mod:`sbe_mcdc`."""


class ExprSyntaxError(SbeError):
    """The decision text could not be parsed.

    ``offset`` is a byte offset into the UTF-8 encoded input and
    ``expected`` the set of tokens that would have been accepted there.
    """

    def __init__(self, message: str, offset: int, expected: frozenset[str] = frozenset()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(detail)


class CoupledCondition(SbeError):
    """A condition occurs more than once, so the expression is not an SBE."""

    def __init__(self, name: str, count: int):
        self.name = name
        self.count = count
        super().__init__(f"condition {name!r} occurs {count} times; expression is not singular")


class MissingVariable(SbeError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"assignment has no value for {name!r}")


class UnknownVariable(SbeError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"{name!r} is not a condition of the expression")


class SizeError(SbeError):
    """Generation needs at least two conditions."""

    def __init__(self, n: int):
        self.n = n
        super().__init__(f"expression has {n} condition(s); at least 2 are required")


class InvalidSlice(SbeError):
    pass


class CompositionConflict(SbeError):
    """A composed table has a duplicate row or a row that fails to flip the decision.

    The offending layout is kept on ``table`` so it can be repaired.
    """

    def __init__(self, reason: str, table=None):
        self.reason = reason
        self.table = table
        super().__init__(reason)


class GenerationFailed(SbeError):
    pass


class TooLarge(SbeError):
    def __init__(self, n: int, max_n: int):
        self.n = n
        self.max_n = max_n
        super().__init__(f"{n} conditions exceeds the exhaustive-search guard of {max_n}")


class HeaderMismatch(SbeError):
    def __init__(self, missing: list[str]):
        self.missing = list(missing)
        super().__init__(f"CSV header lacks column(s): {', '.join(self.missing)}")


class NonBooleanCell(SbeError):
    def __init__(self, row: int, col: str, value: str):
        self.row = row
        self.col = col
        self.value = value
        super().__init__(f"row {row}, column {col!r}: {value!r} is not 0 or 1")


class DecisionMismatch(SbeError):
    def __init__(self, row: int, recorded: bool, actual: bool):
        self.row = row
        self.recorded = recorded
        self.actual = actual
        super().__init__(
            f"row {row}: decision column says {int(recorded)} but expression evaluates to {int(actual)}"
        )
