"""Exceptions shared across the package."""


class ValidationFailure(ValueError):
    """Raised when an input violates one of its structural axioms.

    ``kind`` is a short machine-readable tag such as ``"not_latin"`` or
    ``"distributivity"``; ``witness`` is the lexicographically first index
    tuple (or element) exhibiting the violation.
    """

    def __init__(self, kind, witness=None, message=None):
        self.kind = kind
        self.witness = witness
        super().__init__(message or f"{kind}: witness={witness!r}")


class LimitExceeded(ValueError):
    """Requested size exceeds the configured ceiling."""


class CheckFailed(RuntimeError):
    """An internal cross-check failed; signals a bug, not bad input."""

    def __init__(self, kind, witness=None, message=None):
        self.kind = kind
        self.witness = witness
        super().__init__(message or f"{kind}: witness={witness!r}")
