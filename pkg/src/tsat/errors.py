class InvariantError(AssertionError):
    """A mathematical invariant failed to hold; always a bug."""


class NotApplicable(ValueError):
    """The request is well formed but the hypothesis of the operation fails (e.g. unit ideal)."""
