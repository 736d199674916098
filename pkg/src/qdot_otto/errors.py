"""Exception hierarchy.

Two families matter to callers: ``ParameterError`` for bad inputs (the CLI
maps these to exit code 2) and ``NumericalError`` for failures inside the
numerics (exit code 3).
"""


class QdotOttoError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(QdotOttoError, ValueError):
    """An input parameter violates its documented constraints."""


class ConfigError(ParameterError):
    """A run configuration could not be parsed or validated."""


class UnknownPreset(ConfigError):
    pass


class NonPositiveTemperature(ParameterError):
    pass


class IndexOutOfRange(QdotOttoError, IndexError):
    pass


class NumericalError(QdotOttoError, ArithmeticError):
    """A numerical contract could not be honoured."""


class NonHermitianInput(NumericalError):
    pass


class NotPositiveSemidefinite(NumericalError):
    pass


class InvalidDensityMatrix(NumericalError):
    pass


class AmbiguousPairing(NumericalError):
    """Adiabatic level pairing failed: some matched overlap is below 1/2."""


class RankViolation(NumericalError):
    """More nonzero spin-flip eigenvalues than the generator rank allows."""
