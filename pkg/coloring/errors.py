"""
Workbench Errors
Exception types shared by every package of the workbench
"""


class DomainError(ValueError):
    """Raised when a value lies outside the universe or arithmetic it belongs to"""


class SurjectivityError(DomainError):
    """Raised when a color assignment does not use every color"""


class UnsupportedEquationError(ValueError):
    """Raised when an operation's hypotheses do not cover the given equation"""


class GuardError(ValueError):
    """Raised when a size guard would be exceeded without an explicit override"""


class CheckpointError(ValueError):
    """Raised when a checkpoint file is corrupt or belongs to another run"""
