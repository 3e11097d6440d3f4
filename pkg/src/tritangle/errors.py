"""Shared exception types.

Domain errors (bad arguments, out-of-range parameters) raise plain
``ValueError``; the types below cover failures of numerical contracts.
"""


class NumericalError(RuntimeError):
    """A computation could not meet its accuracy contract."""


class TruncationError(NumericalError):
    """Fock truncation too small for the requested norm budget."""

    def __init__(self, message: str, n_max_required: int | None = None):
        super().__init__(message)
        self.n_max_required = n_max_required
