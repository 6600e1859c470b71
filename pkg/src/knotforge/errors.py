"""Exception types shared across the package."""


class KnotforgeError(Exception):
    """Base class for all errors raised by this package."""


class ZeroPolynomial(KnotforgeError):
    """An operation that needs a nonzero polynomial received the zero polynomial."""


class DomainError(KnotforgeError, ValueError):
    """A numeric argument lies outside the domain of the function."""


class NotInImage(KnotforgeError):
    """The sine-basis polynomial is not in the image of the divided-difference map."""


class SingularSystem(KnotforgeError):
    """An exact linear solve hit a singular matrix."""


class InternalInconsistency(KnotforgeError):
    """A structural self-check failed; indicates a bug, not bad input."""


class EpsilonExhausted(KnotforgeError):
    """Node scaling was halved down to the retry limit without certification."""


class CertificationFailed(KnotforgeError):
    """Explicitly supplied nodes produced a curve that fails its certificate."""


class OrderingViolation(KnotforgeError):
    """The crossing parameters failed the required global ordering."""


class SignViolation(KnotforgeError):
    """The height function failed the alternating over/under sign pattern."""
