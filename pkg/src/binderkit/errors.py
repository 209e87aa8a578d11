"""Exception hierarchy shared by every module."""

from __future__ import annotations


class BinderkitError(Exception):
    """Base class for all library errors."""


class ValidationError(BinderkitError):
    """A term or layer does not conform to its description.

    ``path`` locates the offending node: a tuple of event indices, read from
    the root downwards.
    """

    def __init__(self, message: str, path: tuple[int, ...] = ()):
        super().__init__(message)
        self.message = message
        self.path = tuple(path)

    def __str__(self) -> str:
        if self.path:
            return f"{self.message} (at path {'.'.join(map(str, self.path))})"
        return self.message

    def at(self, index: int) -> "ValidationError":
        """Re-raise helper: prefix ``index`` onto the path."""
        self.path = (index,) + self.path
        return self


class OutOfRangeVar(ValidationError):
    pass


class SortMismatch(ValidationError):
    pass


class LayerShapeMismatch(ValidationError):
    pass


class PayloadDomainError(BinderkitError):
    """A payload value does not inhabit the domain it is compared under."""


class DescError(BinderkitError):
    """A description misbehaves (non-Desc continuation, runaway path)."""
