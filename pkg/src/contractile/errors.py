"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ContractileError(Exception):
    """Base class for all errors raised by this package."""


class GraphParseError(ContractileError, ValueError):
    """Malformed graph6 / edge-list / DIMACS input."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class GraphUsageError(ContractileError, ValueError):
    """An operation was called outside its contract (e.g. contracting an edge)."""


class BudgetExceeded(ContractileError, RuntimeError):
    """A brute-force search ran out of its node/subset budget."""

    def __init__(self, what: str, budget: int, stage: str | None = None):
        msg = f"{what}: budget of {budget} exceeded"
        if stage:
            msg = f"[{stage}] {msg}"
        super().__init__(msg)
        self.what = what
        self.budget = budget
        self.stage = stage


class PreconditionError(ContractileError, ValueError):
    """Input violates a detector precondition; ``certificate`` proves it."""

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class InvariantViolation(ContractileError, AssertionError):
    """An internal guarantee failed; indicates a bug or a violated precondition."""
