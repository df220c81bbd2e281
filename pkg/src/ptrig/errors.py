"""Exception types shared across the package.

DomainError signals an invalid argument (precondition violation); the CLI
maps it to exit code 2.  ConvergenceError and its subclasses signal a
numerical failure (exit code 3).
"""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceError(RuntimeError):
    """An iterative scheme failed to reach its tolerance."""


class BracketError(ConvergenceError):
    """A root solver could not establish or keep a sign-changing bracket."""


class InsufficientCoefficients(ConvergenceError):
    """Too few coefficients above the noise floor for a requested fit."""
