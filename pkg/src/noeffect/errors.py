"""Exception types raised by the noeffect package.

Each class maps to a distinct CLI exit code (see cli.EXIT_CODES).
"""


class NoEffectError(Exception):
    """Base class for all package-specific errors."""


class GridMismatchError(NoEffectError, ValueError):
    """Curves are sampled on different time grids."""


class RowCountMismatchError(NoEffectError, ValueError):
    """Response and covariate files carry different numbers of curves."""


class TooFewCurvesError(NoEffectError, ValueError):
    """Fewer curves than the minimum the test requires."""


class NonFiniteDataError(NoEffectError, ValueError):
    """Input contains NaN or infinite values."""


class InvalidDirectionError(NoEffectError, ValueError):
    """Direction vector is not unit-norm (or is all-zero)."""


class InvalidBandwidthError(NoEffectError, ValueError):
    """Kernel bandwidth is not strictly positive."""


class InvalidInputError(NoEffectError, ValueError):
    """Generic invalid argument (non-finite scores, bad dimensions, ...)."""


class DegenerateVarianceError(NoEffectError, RuntimeError):
    """All kernel-weighted response pairs vanish; the statistic is undefined."""


class BootstrapAbortError(NoEffectError, RuntimeError):
    """Too many bootstrap replicates aborted on degenerate variance."""


class PowerStudyError(NoEffectError, RuntimeError):
    """Too many Monte Carlo replications failed."""


class ConfigError(NoEffectError, ValueError):
    """Run configuration is incomplete or out of domain."""
