"""Exception hierarchy shared by every panelcross module."""
from dataclasses import dataclass
from typing import List, Optional


@dataclass(frozen=True)
class Violation:
    """One broken invariant found by a report-based validator."""
    kind: str
    message: str
    subject: Optional[int] = None
    timestamp: Optional[int] = None
    category: Optional[int] = None
    state: Optional[int] = None

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


class PanelCrossError(Exception):
    """Base class for all panelcross errors."""
    pass


class ValidationError(PanelCrossError):
    """Raised when input data breaks a model invariant."""

    def __init__(self, message: str, violations: Optional[List[Violation]] = None):
        super().__init__(message)
        self.violations = list(violations or [])


class ParseError(ValidationError):
    """Raised when an instance, layout or space file cannot be read.

    `row`/`column` are 1-based CSV positions; `path` is a JSON pointer-like
    location such as ``tests[2][3]``.
    """

    def __init__(self, message: str, row: Optional[int] = None,
                 column: Optional[int] = None, path: Optional[str] = None):
        where = []
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column}")
        if path:
            where.append(path)
        full = f"{message} ({', '.join(where)})" if where else message
        super().__init__(full)
        self.row = row
        self.column = column
        self.path = path


class LayoutError(PanelCrossError):
    """Raised for dimension mismatches or non category-consistent layouts."""
    pass


class BudgetExceededError(PanelCrossError):
    """Raised when an exhaustive computation would exceed its configured budget."""

    def __init__(self, message: str, required: Optional[int] = None,
                 budget: Optional[int] = None):
        super().__init__(message)
        self.required = required
        self.budget = budget


class ConfigError(PanelCrossError):
    """Raised when the configuration file or environment is invalid."""
    pass


class UsageError(PanelCrossError):
    """Raised for command-line usage errors."""
    pass
