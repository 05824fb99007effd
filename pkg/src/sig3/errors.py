"""Exception types shared across the package."""


class Sig3Error(Exception):
    """Base class for all errors raised by this package."""


class DomainError(Sig3Error, ValueError):
    """Argument outside the mathematical domain of the operation."""


class ConfigError(Sig3Error, ValueError):
    """Invalid grid or configuration request."""


class DegenerateLattice(Sig3Error, ValueError):
    """Midpoint values collapse; no non-degenerate period lattice exists."""


class NonConvergence(Sig3Error, ArithmeticError):
    """An iteration or series failed to meet its tolerance within budget."""


class PoleError(Sig3Error, ArithmeticError):
    """Evaluation point is too close to a pole of the function."""


class QuadratureFailure(Sig3Error, ArithmeticError):
    """Adaptive quadrature could not reach the requested tolerance."""
