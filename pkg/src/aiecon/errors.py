"""Exception hierarchy.

Everything raised on bad model input derives from :class:`ModelError`, which
the CLI maps to exit code 2. Input parsing problems derive from
:class:`InputError` (exit code 1).
"""


class ModelError(ValueError):
    """Base class for domain and numerical failures."""


class DomainError(ModelError):
    """An argument lies outside the domain of the function."""


class SingularityError(ModelError):
    """A ratio or division has a zero denominator."""


class PathError(ModelError):
    """An agent path evaluates to a negative population."""


class CalibrationInfeasibleError(ModelError):
    """Back-solving would require a non-positive residual."""


class SingularFitError(ModelError):
    """The least-squares design matrix is rank deficient."""


class IllPosedError(ModelError):
    """The data cannot determine the requested parameters."""


class ShapeError(ModelError):
    """Two series have incompatible horizons."""


class ConfigError(ModelError):
    """A scenario configuration references unknown parameters."""


class InputError(ValueError):
    """Malformed user input (files, flags)."""


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DataError(InputError):
    """Well-formed input whose content is unusable (empty, duplicate keys)."""
