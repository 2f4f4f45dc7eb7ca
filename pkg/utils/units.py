"""
Unit Conversions
Power-ratio decibels and dBm at the configuration boundary.
All model and solver math runs in linear units (watts, unitless gains).
"""

import math
from typing import NewType

from utils.errors import DomainError
from utils.validators import validate_finite, validate_positive

# Power ratio in dB (10*log10 convention)
Decibel = NewType('Decibel', float)
# Absolute power in dBm
DbmPower = NewType('DbmPower', float)


def db_to_linear(x: Decibel) -> float:
    """
    Convert a power ratio in dB to a linear ratio: 10^(x/10).

    Example:
        db_to_linear(-60.0)  # 1e-06
    """
    if not validate_finite(x):
        raise DomainError(f"dB value must be finite, got {x!r}")
    return 10.0 ** (x / 10.0)


def linear_to_db(x: float) -> Decibel:
    """Convert a positive linear power ratio to dB"""
    if not validate_positive(x):
        raise DomainError(f"Linear ratio must be > 0, got {x!r}")
    return Decibel(10.0 * math.log10(x))


def dbm_to_watts(x: DbmPower) -> float:
    """
    Convert dBm to watts: 10^((x-30)/10).

    Example:
        dbm_to_watts(30.0)  # 1.0
    """
    if not validate_finite(x):
        raise DomainError(f"dBm value must be finite, got {x!r}")
    return 10.0 ** ((x - 30.0) / 10.0)


def watts_to_dbm(x: float) -> DbmPower:
    """Convert watts to dBm; inverse of dbm_to_watts"""
    if not validate_positive(x):
        raise DomainError(f"Power must be > 0 W, got {x!r}")
    return DbmPower(10.0 * math.log10(x) + 30.0)
