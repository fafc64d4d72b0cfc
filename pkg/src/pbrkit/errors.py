"""Exception types raised by the toolkit."""


class ToolkitError(Exception):
    """Base class for all toolkit-specific errors."""


class KindMismatch(ToolkitError, TypeError):
    """Kronecker product mixing a vector with a matrix."""


class DimMismatch(ToolkitError, ValueError):
    """Operands have incompatible dimensions."""


class AngleOutOfRange(ToolkitError, ValueError):
    """Overlap angle outside (0, pi/2], or cos outside [0, 1)."""


class DegeneratePair(ToolkitError, ValueError):
    """States are identical up to a global phase."""


class CopiesOutOfRange(ToolkitError, ValueError):
    """Tensor-power copy count outside [1, 10]."""


class InconsistentPhases(ToolkitError, ValueError):
    """beta does not solve the zero-diagonal condition, so no unit-modulus phase exists."""


class InvalidGroupCount(ToolkitError, ValueError):
    """Device count must be an even integer >= 2."""


class GridOutOfRange(ToolkitError, ValueError):
    """Grid value outside the open interval (0, 1)."""


class BadPreparation(ToolkitError, ValueError):
    """Preparation index outside {1, 2, 3, 4}."""


class BadEpsilon(ToolkitError, ValueError):
    """Compatibility probability outside [0, 1]."""
