"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    """Raised when an input violates an operation's precondition."""


class VerificationFailure(AssertionError):
    """A computed identity did not hold.

    ``witness`` carries whatever identifies the failing case (indices,
    offending coefficient, the two sides).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
