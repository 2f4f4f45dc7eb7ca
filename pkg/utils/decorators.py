"""
Utility Decorators
Decorators for command error handling and exit codes
"""

import logging
from functools import wraps

import click

from utils.errors import (
    ConfigError,
    ConvergenceError,
    DomainError,
    InfeasibleError,
    ThresholdNotFoundError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3

# Exception type -> process exit code
EXIT_CODES = (
    (InfeasibleError, EXIT_INFEASIBLE),
    (ConfigError, EXIT_USAGE),
    (ThresholdNotFoundError, EXIT_USAGE),
    (DomainError, EXIT_USAGE),
)


def handle_command_errors(f):
    """
    Decorator that turns domain exceptions into exit codes

    Usage:
        @cli.command()
        @handle_command_errors
        def solve(config_path):
            ...

    Config/usage and domain errors exit with 2, infeasible instances with 3.
    Convergence failures propagate as ordinary crashes.
    """
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ConvergenceError:
            raise
        except tuple(exc for exc, _ in EXIT_CODES) as e:
            code = next(code for exc, code in EXIT_CODES if isinstance(e, exc))
            logger.error(f"{f.__name__} failed: {e}")
            click.echo(f"Error: {e}", err=True)
            raise SystemExit(code)
    return decorated_function
