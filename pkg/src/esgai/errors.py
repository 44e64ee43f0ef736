"""Error types shared across the package.

Every failure surfaced to callers carries a stable machine-readable code
(dotted lowercase, e.g. ``override.note.required``). CLI exit codes and API
status codes are derived from these codes, never from message text.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Violation:
    """A single invariant breach found while validating a record."""

    code: str
    path: str
    message: str

    def to_dict(self) -> dict[str, str]:
        return {"code": self.code, "path": self.path, "message": self.message}


class DomainError(Exception):
    """Base error: a stable code plus a human-readable message."""

    def __init__(self, code: str, message: str, details: Any = None):
        super().__init__(message)
        self.code = code
        self.message = message
        self.details = details

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"code": self.code, "message": self.message}
        if self.details is not None:
            out["details"] = self.details
        return out


class ValidationError(DomainError):
    """Raised when a record breaks one or more invariants.

    Collects every violation rather than stopping at the first one, so the
    caller can report them all at once.
    """

    def __init__(self, violations: list[Violation], code: str = "validation"):
        self.violations = violations
        summary = "; ".join(f"{v.path}: {v.message}" for v in violations[:5])
        if len(violations) > 5:
            summary += f" (+{len(violations) - 5} more)"
        super().__init__(code, summary, details=[v.to_dict() for v in violations])


class NotFoundError(DomainError):
    pass


class ConflictError(DomainError):
    def __init__(self, code: str, message: str, expected: int | None = None, actual: int | None = None):
        details = None
        if expected is not None or actual is not None:
            details = {"expected_revision": expected, "stored_revision": actual}
        super().__init__(code, message, details)
