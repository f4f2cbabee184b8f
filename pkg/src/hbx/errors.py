"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`HbxError`,
so callers (and the command line front end) can separate input problems
from bugs.
"""


class HbxError(Exception):
    """Base class for all package errors."""


class ShapeMismatch(HbxError):
    pass


class FieldMismatch(HbxError):
    pass


class BraidMismatch(HbxError):
    pass


class DegreeError(HbxError):
    """A matrix entry connects basis vectors of different degree."""


class NotInvertible(HbxError):
    pass


class InvalidHopf(HbxError):
    pass


class InvalidBrace(HbxError):
    pass


class InvalidCocycle(HbxError):
    pass


class InvalidModule(HbxError):
    pass


class InvalidInput(HbxError):
    pass


class InvalidGroup(HbxError):
    pass


class InvalidSkewBrace(HbxError):
    pass


class OrderTooLarge(HbxError):
    pass


class CharTwo(HbxError):
    pass


class NoPrimitiveRoot(HbxError):
    pass


class NotSymmetric(HbxError):
    pass


class NotCocommutative(HbxError):
    pass


class InternalInconsistency(HbxError):
    """A derived identity failed although its premises passed."""
