"""Exception types raised by the solver pipeline."""


class LegodeError(Exception):
    """Base class for all package errors."""


class ConvergenceError(LegodeError):
    """An adaptive procedure hit its resolution cap without converging."""


class SingularSystemError(LegodeError):
    """The truncated system matrix is numerically singular."""
