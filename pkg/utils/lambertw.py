"""
Lambert W Function
Principal branch W0 on the non-negative real axis.

W(x) solves w * exp(w) = x. Only x >= 0 is supported; that covers the
closed-form jamming power, whose argument is e / gamma_SU > 0.
"""

import logging
import math
from dataclasses import dataclass

from utils.errors import ConvergenceError, DomainError
from utils.validators import validate_finite

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 50


@dataclass(frozen=True)
class WResult:
    """Value of W0(x) with iteration diagnostics"""
    w: float
    iterations: int
    residual: float


def _initial_guess(x):
    if x > math.e:
        lx = math.log(x)
        return lx - math.log(lx)
    return math.log1p(x)


def lambert_w0(x, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER):
    """
    Evaluate the principal branch of Lambert W for x >= 0.

    Uses Halley's iteration, with the step damped so the iterate never
    drops to the branch point w = -1. Stops once
    |w*exp(w) - x| <= tol * max(1, x).

    Args:
        x (float): Argument, x >= 0
        tol (float): Relative residual tolerance
        max_iter (int): Iteration cap

    Returns:
        WResult: w, iterations used and final residual

    Raises:
        DomainError: x negative or not finite
        ConvergenceError: residual still above tolerance after max_iter steps
    """
    if not validate_finite(x) or x < 0:
        raise DomainError(f"lambert_w0 requires finite x >= 0, got {x!r}")
    if x == 0:
        return WResult(w=0.0, iterations=0, residual=0.0)

    scale = max(1.0, x)
    w = _initial_guess(x)
    residual = w * math.exp(w) - x

    for iteration in range(1, max_iter + 1):
        if abs(residual) <= tol * scale:
            return WResult(w=w, iterations=iteration - 1, residual=abs(residual))

        ew = math.exp(w)
        wp1 = w + 1.0
        step = residual / (ew * wp1 - (w + 2.0) * residual / (2.0 * wp1))
        # Keep the iterate on the principal branch
        if w - step <= -1.0:
            step = 0.5 * (w + 1.0)
        w -= step
        residual = w * math.exp(w) - x

    if abs(residual) <= tol * scale:
        return WResult(w=w, iterations=max_iter, residual=abs(residual))

    logger.error(f"Lambert W did not converge for x={x!r}: residual {residual!r}")
    raise ConvergenceError(
        f"lambert_w0 did not converge within {max_iter} iterations for x={x!r}"
    )
