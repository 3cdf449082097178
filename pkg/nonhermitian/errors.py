# FILE: nonhermitian/errors.py


class SpectralError(Exception):
    """Base class for numerical failures raised by the solvers."""


class NonConvergence(SpectralError):
    """The dense eigensolver failed to deflate the matrix."""


class SingularMatrix(SpectralError):
    """A pivot fell below the singularity threshold.

    For eigenvector matrices this signals coalescing eigenvectors, i.e. an
    exceptional point.
    """


class ContractViolation(SpectralError):
    """A residual or normalization contract failed at construction."""


class ExceptionalInput(SpectralError):
    """The operation is undefined at the exceptional point mu^2 = 1."""


class DomainError(SpectralError, ValueError):
    """An evaluation point lies outside the region where the formula is valid."""


class ParityError(SpectralError, ValueError):
    """Coupling requested between two basis functions of equal parity."""


class OverflowGuard(SpectralError):
    """Shooting solutions outgrew the representable range even after renormalization."""


class NoConvergence(SpectralError):
    """Secant refinement of a shooting eigenvalue did not converge."""


class ClassificationWarning(UserWarning):
    """A complex eigenvalue found no conjugate partner inside the matching window."""
