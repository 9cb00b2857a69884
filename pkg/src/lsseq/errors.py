"""Exception types shared across the library.

Everything derives from :class:`LsSeqError` (itself a ``ValueError``) so
callers can catch library failures with a single except clause while the
CLI maps the class name to a machine-readable reason string.
"""


class LsSeqError(ValueError):
    """Base class for all lsseq errors."""


# -- parameter validation -----------------------------------------------------

class EmptyTuple(LsSeqError):
    """The coefficient tuple is empty."""


class ZeroEndpoint(LsSeqError):
    """The first or last splitting coefficient is zero."""


class DegenerateAlphabet(LsSeqError):
    """Sum of coefficients below 2: the digit alphabet would be empty."""


class RootConditionViolated(LsSeqError):
    """Some conjugate root is not strictly outside the unit circle."""


class MultipleRoot(LsSeqError):
    """Characteristic roots are not pairwise separated."""


class IllConditioned(LsSeqError):
    """Spectral data failed its reconstruction residual check."""


# -- numeration / points ------------------------------------------------------

class NonPositiveIndex(LsSeqError):
    """An index that must be >= 1 was not."""


class InvalidExpansion(LsSeqError):
    """A digit string violates the expansion constraints."""


class NotElementary(LsSeqError):
    """The requested (x, m) pair is not an elementary interval."""


class NotMember(LsSeqError):
    """The point with the given index does not lie in the interval."""


# -- discrepancy / bounds -----------------------------------------------------

class EmptySet(LsSeqError):
    """Discrepancy of an empty point set is undefined."""


class OutOfRange(LsSeqError):
    """A point value lies outside [0, 1)."""


class TooLarge(LsSeqError):
    """Requested size exceeds the desk-scale guard for this operation."""


class InvalidClassicalParams(LsSeqError):
    """Two-length bound formulas need integer L >= 1, S >= 1."""


class UnknownFunction(LsSeqError):
    """Integrand name not in the builtin set."""
