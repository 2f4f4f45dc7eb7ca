"""
Golden-Section Search
Derivative-free maximizer for unimodal (pseudo-concave) functions on a bracket.
"""

import logging
import math
from dataclasses import dataclass

from utils.errors import ConvergenceError, DomainError
from utils.validators import validate_finite, validate_positive

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2         # 1 / phi ~ 0.618
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2
GS_RATIO = 0.618


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a golden-section search"""
    x: float
    fx: float
    lo: float
    hi: float
    iterations: int


def gs_iteration_bound(width, epsilon):
    """
    Smallest N with width * 0.618^N <= epsilon.

    Returns 0 when the bracket is already within tolerance.
    """
    if not validate_positive(epsilon):
        raise DomainError(f"epsilon must be > 0, got {epsilon!r}")
    if width <= epsilon:
        return 0
    return int(math.ceil(math.log(epsilon / width) / math.log(GS_RATIO)))


def _evaluate(f, x):
    fx = f(x)
    if not validate_finite(fx):
        raise ConvergenceError(f"Objective returned non-finite value {fx!r} at x={x!r}")
    return float(fx)


def golden_section_max(f, a, b, epsilon, max_iter=200):
    """
    Maximize a unimodal function on [a, b].

    The bracket shrinks by 1/phi per iteration until its width is at most
    epsilon. The returned point is the better of the final bracket midpoint
    and the two bracket ends of the original interval, so maxima sitting on
    a boundary are returned exactly.

    Args:
        f (callable): Objective, float -> float
        a (float): Bracket lower end
        b (float): Bracket upper end
        epsilon (float): Bracket width tolerance
        max_iter (int): Iteration cap

    Returns:
        SearchResult: argmax, value, final bracket and iteration count
    """
    if not (validate_finite(a) and validate_finite(b)) or b < a:
        raise DomainError(f"Invalid bracket [{a!r}, {b!r}]")
    if not validate_positive(epsilon):
        raise DomainError(f"epsilon must be > 0, got {epsilon!r}")

    a0, b0 = a, b
    h = b - a
    if h <= epsilon:
        x = 0.5 * (a + b)
        return SearchResult(x=x, fx=_evaluate(f, x), lo=a, hi=b, iterations=0)

    # Required steps to achieve tolerance
    n = int(math.ceil(math.log(epsilon / h) / math.log(INV_PHI)))
    if n > max_iter:
        raise ConvergenceError(
            f"Golden-section search needs {n} iterations, cap is {max_iter}"
        )

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = _evaluate(f, c)
    yd = _evaluate(f, d)

    for _ in range(n - 1):
        if yc > yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = _evaluate(f, c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = _evaluate(f, d)

    if yc > yd:
        b = d
    else:
        a = c

    x = 0.5 * (a + b)
    fx = _evaluate(f, x)
    for edge in (a0, b0):
        f_edge = _evaluate(f, edge)
        if f_edge > fx:
            x, fx = edge, f_edge

    logger.debug(f"Golden-section search converged in {n} iterations: x={x!r}")
    return SearchResult(x=x, fx=fx, lo=a, hi=b, iterations=n)
