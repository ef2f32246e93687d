"""Exception hierarchy shared across the package."""


class SubdiffError(Exception):
    """Base class for all package-specific errors."""


class MeshError(SubdiffError):
    """Invalid mesh, dimension mismatch, or non-nested mesh pair."""


class ParameterError(SubdiffError):
    """Scalar parameter outside its admissible range."""


class CoefficientBoundError(SubdiffError):
    """Diffusion coefficient evaluated outside [1/lambda, lambda]."""


class QuadratureError(SubdiffError):
    """Adaptive quadrature failed to converge on some element."""


class SolverError(SubdiffError):
    """Linear solver breakdown (system not SPD / singular pivot)."""


class ContourAccuracyError(SubdiffError):
    """Contour quadrature result failed its accuracy diagnostic."""


class OracleInconsistencyError(SubdiffError):
    """Two independent oracle evaluation paths disagree."""


class ConfigError(SubdiffError):
    """Malformed or invalid run configuration file."""


class ExpressionError(ConfigError):
    """Syntax or semantic error in a coefficient/data expression."""
