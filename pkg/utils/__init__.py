"""
Utils Package
Contains unit conversions, numeric routines, validators and decorators
"""

from utils.errors import (
    AeeError,
    ConfigError,
    ConvergenceError,
    DomainError,
    InfeasibleError,
    ThresholdNotFoundError
)
from utils.decorators import handle_command_errors

__all__ = [
    'AeeError',
    'ConfigError',
    'ConvergenceError',
    'DomainError',
    'InfeasibleError',
    'ThresholdNotFoundError',
    'handle_command_errors'
]
