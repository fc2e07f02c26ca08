"""Exception hierarchy. Everything derives from :class:`LatticeError`."""


class LatticeError(ValueError):
    """Base class for domain errors raised by latcirc."""


class DegenerateError(LatticeError):
    """A zero vector, a collinear angle or a non-primitive direction."""


class DomainError(LatticeError):
    """Input outside an operation's domain (too few points, bad modulus...)."""


class NotShiftDivisibleError(LatticeError):
    def __init__(self, a, b, k):
        self.a, self.b, self.k = a, b, k
        super().__init__(f"points {tuple(a)} and {tuple(b)} are not congruent mod {k}")


class CoveringError(LatticeError):
    """The set covers the torus of ``prime``, so no avoiding point exists."""

    def __init__(self, prime):
        self.prime = prime
        super().__init__(f"set covers the torus T_{prime}")


class NoCircleError(LatticeError):
    """No circumscribed circle of the requested radius; carries a refutation."""

    def __init__(self, certificate, message=None):
        self.certificate = certificate
        super().__init__(message or f"no circumscribed circle: {certificate}")


class TraceTooLargeError(LatticeError):
    """The explicit CRT construction would exceed the configured size limit."""
