"""Exception types raised across the toolkit."""


class CoprimeSpecError(Exception):
    """Base class for all toolkit-specific errors."""


class NotCoprimeError(CoprimeSpecError, ValueError):
    """A sampler pair (or level pair) shares a common factor."""


class TooFewLevelsError(CoprimeSpecError, ValueError):
    """Multi-level schemes need at least two levels."""


class InvalidPeriodsError(CoprimeSpecError, ValueError):
    """The per-snapshot period count must be a positive integer."""


class UnsupportedSchemeError(CoprimeSpecError, ValueError):
    """The requested operation is not defined for this scheme kind."""


class AsymmetricLagTableError(CoprimeSpecError, ValueError):
    """A lag table violates the weight symmetry between +l and -l."""


class FrequencyOutOfRangeError(CoprimeSpecError, ValueError):
    """A normalized tone frequency lies outside the open interval (0, 1)."""


class NoMinimumFoundError(CoprimeSpecError, ValueError):
    """A window has no interior local minimum to measure."""


class LengthMismatchError(CoprimeSpecError, ValueError):
    """Sample values do not align with the sampling instants."""


class NonPositiveInputError(CoprimeSpecError, ValueError):
    """A strictly positive quantity was zero or negative."""


class InvalidConfigError(CoprimeSpecError, ValueError):
    """An experiment configuration is inconsistent or incomplete."""
