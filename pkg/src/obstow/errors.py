"""Exception types raised across the package."""


class ObstowError(Exception):
    """Base class for all package errors."""


class InvalidParameter(ObstowError):
    """A numeric parameter violates its admissible range."""


class Incompatible(ObstowError):
    """Obstacle exceeds the boundary data somewhere on the parabolic strip."""


class OutOfDomain(ObstowError):
    """A point was queried outside the region where the quantity is defined."""


class StencilTooSmall(ObstowError):
    """An epsilon-ball contains fewer than three lattice nodes."""


class NoWitness(ObstowError):
    """No exterior tangent ball of the asserted radius exists at the point."""


class NonStabilizing(ObstowError):
    """Whole-field value iteration failed to settle within the step budget."""


class IllegalMove(ObstowError):
    """A strategy proposed a point outside the open epsilon-ball."""


class DegenerateGradient(ObstowError):
    """Gradient-branch consistency requested at a critical point."""


class InsufficientData(ObstowError):
    """Too few episodes for a statistically meaningful diagnostic."""


class CFLViolation(ObstowError):
    """Explicit finite-difference time step exceeds the stability limit."""


class ConfigError(ObstowError):
    """Base class for run-configuration problems."""


class ParseError(ConfigError):
    """Configuration text is not well formed."""


class ValidationError(ConfigError):
    """Configuration parsed but violates an invariant."""
