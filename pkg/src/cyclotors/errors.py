"""Exception types shared across the package."""


class CyclotorsError(Exception):
    """Base class for all package-specific errors."""


class SingularCurveError(CyclotorsError):
    """Raised when a Weierstrass equation has vanishing discriminant."""


class SingularRootError(CyclotorsError):
    """Raised when Hensel lifting is attempted at a non-simple root."""


class BadPrimeError(CyclotorsError):
    """Raised when a prime violates the preconditions of a modular routine."""


class BadReductionError(CyclotorsError):
    """Raised when a curve has bad reduction at the requested prime."""


class RamifiedPrimeError(CyclotorsError):
    """Raised when splitting data is requested at a ramified prime."""


class NotFoundError(CyclotorsError):
    """Raised when a label or table row does not exist."""


class TransportError(CyclotorsError):
    """Raised on network failure while talking to a remote service."""


class ConfigurationError(CyclotorsError):
    """Raised when required local data (fixtures, primes) is unavailable."""
