"""Typed exceptions shared across the package.

Verification code needs to tell numerical failure (quadrature did not
converge, pivot collapsed) apart from formula misuse (argument outside a
function's domain, invalid kernel parameters), so every failure mode gets
its own class instead of a sentinel return value.
"""


class DomainError(ValueError):
    """Argument lies outside the mathematical domain of a function."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole (e.g. Gamma at -n)."""


class ParameterError(ValueError):
    """Kernel or process parameters violate their constraints."""


class BesselOverflowError(OverflowError):
    """A Bessel evaluation exceeds the representable double range."""


class ConvergenceError(RuntimeError):
    """An adaptive numerical scheme failed to meet its tolerance."""


class SingularOperatorError(RuntimeError):
    """A linear solve hit a (numerically) singular matrix."""


class WindowError(ValueError):
    """Points fall outside a finite window, or window kinds mismatch."""


class DegenerateGridError(ValueError):
    """Too few distinct grid points to build the requested polynomials."""
