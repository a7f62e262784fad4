"""Exception hierarchy.

Precondition failures (singular input, degenerate form, bad dimension, ...)
derive from :class:`PreconditionError`.  Malformed input derives from
:class:`InputError`.  :class:`VerificationError` signals that an exact
identity which must hold by construction did not; it always means a bug.
"""


class SymplieError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SymplieError, ValueError):
    """Input could not be parsed or has the wrong shape."""


class ShapeMismatchError(InputError):
    pass


class PreconditionError(SymplieError, ValueError):
    """A mathematical precondition of an operation is violated."""


class SingularMatrixError(PreconditionError):
    pass


class NotSymmetricError(PreconditionError):
    pass


class NotPermutationError(PreconditionError):
    pass


class DegenerateFormError(PreconditionError):
    pass


class InvalidDimensionError(PreconditionError):
    pass


class UnsupportedFamilyError(PreconditionError):
    pass


class NotClosedProfileError(PreconditionError):
    pass


class VerificationError(SymplieError, AssertionError):
    """An exact identity that holds by construction failed to hold."""
