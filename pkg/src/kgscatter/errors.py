"""Exception types shared across the package.

Every numerical refusal gets its own class so callers (and the CLI) can
tell a threshold skip from a genuine breakdown.
"""


class KgScatterError(Exception):
    """Base class for all package errors."""


class SeriesNoConvergence(KgScatterError):
    """Hypergeometric series failed to converge within the term cap."""


class ParameterPole(KgScatterError):
    """2F1 parameter c at (or within tolerance of) a non-positive integer."""


class ConnectionDegenerate(KgScatterError):
    """b - a too close to an integer for the z -> 1/z inversion formula."""


class GammaPole(KgScatterError):
    """log-gamma requested at (or within tolerance of) a non-positive integer."""


class ThresholdSingular(KgScatterError):
    """Energy too close to a regime threshold for a stable solve."""


class IllConditioned(KgScatterError):
    """Matching system condition number exceeds the refusal limit."""


class StepTooCoarse(KgScatterError):
    """ODE integration step left a unitarity residual above tolerance."""


class ConfigInvalid(KgScatterError):
    """Sweep configuration failed validation."""


class IoFailure(KgScatterError):
    """Output file could not be written."""
