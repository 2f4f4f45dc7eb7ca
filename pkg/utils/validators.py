import math


def validate_finite(value):
    """
    Validate that value is a finite real number.
    Returns True if valid, False otherwise.
    """
    if value is None or isinstance(value, bool):
        return False
    try:
        return math.isfinite(value)
    except TypeError:
        return False


def validate_positive(value):
    """
    Validate that value is finite and strictly positive.
    Returns True if valid, False otherwise.
    """
    return validate_finite(value) and value > 0


def validate_non_negative(value):
    """
    Validate that value is finite and >= 0.
    Returns True if valid, False otherwise.
    """
    return validate_finite(value) and value >= 0


def validate_unit_interval(value, open_low=False):
    """
    Validate that value lies in [0, 1], or (0, 1] when open_low is set.
    Returns True if valid, False otherwise.
    """
    if not validate_finite(value):
        return False
    if open_low:
        return 0 < value <= 1
    return 0 <= value <= 1


def validate_sweep_range(lo, hi, points):
    """
    Validate a sweep grid description:
    - Both ends finite
    - lo strictly below hi
    - At least two points
    """
    if not (validate_finite(lo) and validate_finite(hi)):
        return False
    if not lo < hi:
        return False
    return isinstance(points, int) and not isinstance(points, bool) and points >= 2
