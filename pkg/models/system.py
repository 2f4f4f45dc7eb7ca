"""
System Model Types
Channel gains, attacker/legitimate-link parameters and attack decisions.
Everything here is in linear units: watts, unitless gains, bps/Hz.
"""

from dataclasses import dataclass, replace

from utils.errors import DomainError
from utils.validators import (
    validate_non_negative,
    validate_positive,
    validate_unit_interval,
)


@dataclass(frozen=True)
class LinkGains:
    """Channel power gains of the S-U, S-A and A-U links"""
    g_su: float
    g_sa: float
    g_au: float

    def __post_init__(self):
        for name in ('g_su', 'g_sa', 'g_au'):
            value = getattr(self, name)
            if not validate_positive(value):
                raise DomainError(f"{name} must be finite and > 0, got {value!r}")

    def with_ratios(self, ratio_su_sa=None, ratio_su_au=None):
        """
        Return gains with g_SA and/or g_AU set from g_SU ratios.
        g_SU stays fixed; the attacker-side gains move.
        """
        changes = {}
        if ratio_su_sa is not None:
            changes['g_sa'] = self.g_su / ratio_su_sa
        if ratio_su_au is not None:
            changes['g_au'] = self.g_su / ratio_su_au
        return replace(self, **changes)


@dataclass(frozen=True)
class SystemParams:
    """
    Transmit powers, noise and attacker consumption constants

    Fields:
        p_s: source transmit power (W)
        sigma2: noise power at U and A (W)
        p_jm: maximum jamming power (W)
        p_m: attacker total power budget (W)
        p_fr: static receive consumption (W)
        p_ft: static transmit consumption (W)
        rho_d: decoding consumption per unit rate (W per bps/Hz)
        nu: power amplifier efficiency, (0, 1]
    """
    p_s: float
    sigma2: float
    p_jm: float
    p_m: float
    p_fr: float
    p_ft: float
    rho_d: float
    nu: float

    def __post_init__(self):
        for name in ('p_s', 'sigma2', 'p_m', 'rho_d'):
            value = getattr(self, name)
            if not validate_positive(value):
                raise DomainError(f"{name} must be finite and > 0, got {value!r}")
        for name in ('p_jm', 'p_fr', 'p_ft'):
            value = getattr(self, name)
            if not validate_non_negative(value):
                raise DomainError(f"{name} must be finite and >= 0, got {value!r}")
        if not validate_unit_interval(self.nu, open_low=True):
            raise DomainError(f"nu must lie in (0, 1], got {self.nu!r}")

    def evolve(self, **changes):
        """Copy with some fields replaced (validated again)"""
        return replace(self, **changes)


@dataclass(frozen=True)
class AttackDecision:
    """The (alpha, r_A, P_J) decision triple"""
    alpha: float
    r_a: float
    p_j: float

    def __post_init__(self):
        if not validate_unit_interval(self.alpha):
            raise DomainError(f"alpha must lie in [0, 1], got {self.alpha!r}")
        if not validate_non_negative(self.r_a):
            raise DomainError(f"r_a must be >= 0, got {self.r_a!r}")
        if not validate_non_negative(self.p_j):
            raise DomainError(f"p_j must be >= 0, got {self.p_j!r}")


@dataclass(frozen=True)
class RateSummary:
    """Link rates and SNRs without jamming"""
    r_u: float
    r_a_max: float
    gamma_su: float
    gamma_sa: float
