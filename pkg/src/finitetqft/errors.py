"""Exception hierarchy shared by all modules.

Every error that signals malformed input data derives from ValidationError,
every error that signals a blown resource budget derives from ResourceLimit.
Verification failures (exact identities that do not hold) are reported as
data, never as exceptions.
"""

from __future__ import annotations


class TqftError(Exception):
    """Base class for all package errors."""


class ValidationError(TqftError):
    """Input data violates a structural invariant."""


class ResourceLimit(TqftError):
    """A configured search or size cap was exceeded."""


# -- groups ------------------------------------------------------------------

class NonAssociative(ValidationError):
    pass


class NoIdentity(ValidationError):
    pass


class NoInverse(ValidationError):
    pass


class NotLatinSquare(ValidationError):
    pass


class UnknownName(ValidationError):
    pass


class SizeLimit(ResourceLimit):
    pass


class NotClosed(ValidationError):
    """A set that must be closed under a group action is not."""


# -- cochains ----------------------------------------------------------------

class ArityTooHigh(ValidationError):
    pass


class NotCocycle(ValidationError):
    pass


# -- dcomplex ----------------------------------------------------------------

class NotInvolution(ValidationError):
    pass


class NonOrientable(ValidationError):
    pass


class DanglingFace(ValidationError):
    pass


class OrderViolation(ValidationError):
    """A gluing correspondence does not respect local vertex order."""


class IncompatibleMatching(ValidationError):
    pass


class OrientationClash(ValidationError):
    pass


class NotASurface(ValidationError):
    pass


# -- gauge / pathintegral ----------------------------------------------------

class UnknownLoops(ValidationError):
    pass


class NotClosedComplex(ValidationError):
    pass


class NotFlat(ValidationError):
    pass


class NotFlatBoundary(ValidationError):
    pass


class TwistedGenusUnsupported(ValidationError):
    pass


class UnsupportedSurface(ValidationError):
    pass


class SectorMismatch(ValidationError):
    pass


# -- euler -------------------------------------------------------------------

class NotClosedSurface(ValidationError):
    pass


class NotRelative(ValidationError):
    pass


class NonIntegerTotal(ValidationError):
    pass


class NonIntegerRelative(ValidationError):
    pass


class TorsorMismatch(ValidationError):
    pass
