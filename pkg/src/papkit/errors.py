"""Exception hierarchy.

Everything derives from :class:`PapkitError` (itself a ``ValueError``) so callers
can catch the whole family or individual conditions.
"""


class PapkitError(ValueError):
    """Base class for all domain errors raised by papkit."""


# --- permutation construction / parsing ---

class NotABijection(PapkitError):
    """Word is not a rearrangement of 1..n."""


class ElementOutOfRange(PapkitError):
    """A cycle or index refers to an element outside [n]."""


class DuplicateElement(PapkitError):
    """An element appears twice across the given cycles."""


# --- domain preconditions of the maps ---

class NotAPap(PapkitError):
    """Input is not a parity alternating permutation starting odd."""


class NotAPad(PapkitError):
    """Input is not a parity alternating derangement."""


class NotADerangement(PapkitError):
    """Input has a fixed point."""


class SizeMismatch(PapkitError):
    """Part sizes are inconsistent with the carried total size."""


class SizeTooSmall(PapkitError):
    """The map is undefined below this size."""


class OddSize(PapkitError):
    """Chain derangements exist only for even sizes."""


class MalformedImage(PapkitError):
    """An image tuple has the wrong shape for the requested inverse."""


class ForbiddenPair(PapkitError):
    """The pair lies in the excluded set of the insertion bijection."""


class ExceptionalDerangement(PapkitError):
    """The derangement lies in the excluded set of the removal bijection."""


class ExceptionalInput(PapkitError):
    """The derangement has no extraction point."""


class ExceptionalPad(PapkitError):
    """The parity alternating derangement lies in an excluded set."""


class ExtractionMissing(PapkitError):
    """The part targeted by the fixed-side involution has no extraction point.

    This can happen for inputs outside the exceptional set (first at n = 8); the
    verification report documents the phenomenon rather than patching around it.
    """


# --- enumeration / tables ---

class BoundExceeded(PapkitError):
    """Requested size is beyond the configured brute-force bound."""


class IndexOutOfRange(PapkitError):
    """Triangle or convolution index outside its valid range."""


# --- exact power series ---

class DivisionBySeriesWithZeroConstant(PapkitError):
    """Series division needs a unit (nonzero constant term) divisor."""


class NonZeroConstantTerm(PapkitError):
    """exp/compose/arcsin need an inner series with zero constant term."""


class NonSquareConstantTerm(PapkitError):
    """Series square root needs a constant term with a nonzero rational root."""


class DivisibilityFailure(PapkitError):
    """Exact polynomial division left a nonzero remainder."""
