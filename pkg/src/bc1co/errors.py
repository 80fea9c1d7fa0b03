"""Exception hierarchy shared across the package."""


class Bc1Error(Exception):
    """Base class for all package errors."""


class ParameterDomainError(Bc1Error):
    """Parameters violate a domain hypothesis (e.g. sigma too small)."""


class DegenerateParameterError(Bc1Error):
    """A denominator Pochhammer or Gamma argument hit a zero divisor."""


class PoleError(Bc1Error):
    """Evaluation at a pole of Gamma or of a Gamma quotient."""


class GammaOverflowError(Bc1Error):
    """Gamma argument too large for double precision."""


class SlowConvergenceError(Bc1Error):
    """A hypergeometric series failed to converge within the term cap."""


class QuadratureError(Bc1Error):
    """Numerical integration failed to converge to the requested tolerance."""
