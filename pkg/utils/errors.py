"""
Error Types
Exception hierarchy shared by the model, solver, experiments and commands
"""


class AeeError(Exception):
    """Base class for all optimizer errors"""


class DomainError(AeeError, ValueError):
    """Numeric input outside the domain of an operation"""


class ConvergenceError(AeeError, RuntimeError):
    """Iterative method hit its cap or produced a non-finite value"""


class InfeasibleError(AeeError, ValueError):
    """Neither attack mode fits the attacker's power budget"""


class ThresholdNotFoundError(AeeError, ValueError):
    """The optimal mode does not change across a search range"""


class ConfigError(AeeError, ValueError):
    """Malformed run configuration or command-line usage"""
