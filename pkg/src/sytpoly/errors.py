"""Exception hierarchy shared by all sytpoly modules."""


class SytpolyError(Exception):
    """Base class for all library errors."""


# partition construction / parsing

class NonIncreasingViolation(SytpolyError):
    """Parts are not a positive, non-increasing sequence."""


class EmptyOrMalformed(SytpolyError):
    """Partition text contains a token that is not a positive integer."""


class EmptyPartition(SytpolyError):
    """Operation requires a non-empty partition."""


class NotAnInnerCorner(SytpolyError):
    """The given cell cannot be removed from the diagram."""


class RowTooShort(SytpolyError):
    """Prepended first row would be shorter than the previous first part."""


# tableaux

class CellOutsideShape(SytpolyError):
    """Cell does not belong to the diagram."""


class NotStandard(SytpolyError):
    """Filling is not a standard tableau."""


class WindowOutOfRange(SytpolyError):
    """Restriction window (h, alpha) is invalid for the partition weight."""


# binomial basis

class NegativeOrder(SytpolyError):
    """Binomial polynomial order must be non-negative."""


class InternalInexactDivision(SytpolyError):
    """Hook-product division left a remainder; indicates a bug."""


class IntegralityViolation(SytpolyError):
    """Fitted coefficients failed to reproduce the sampled values; bug."""


class VanishingViolation(SytpolyError):
    """Low-order coefficients that must vanish did not; bug."""


# bijections

class NotInDomain(SytpolyError):
    """Tableau is outside the domain on which the pivot is defined."""


class NotInSourceSet(SytpolyError):
    """Tableau is not in the source set of the requested map."""


class AlphaOutOfRange(SytpolyError):
    """Map parameter alpha is outside 1..k-h."""
