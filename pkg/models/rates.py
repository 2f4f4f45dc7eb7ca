"""
Rate, Consumption and AEE Formulas
Closed forms for the three-node link: SNRs, secrecy and degraded secrecy
rates, attacker power consumption and attacker energy efficiency (AEE).

Functions taking r_a or p_j accept floats or numpy arrays, so grid oracles
and sweeps evaluate whole grids in one call. Rates are in bps/Hz over a 1 s
block, so energy and power coincide.
"""

import numpy as np

from models.system import AttackDecision, LinkGains, RateSummary, SystemParams
from utils.errors import DomainError


def _ratio_or_zero(numerator, denominator):
    """numerator / denominator, with 0 wherever the denominator is 0"""
    numerator = np.asarray(numerator, dtype=float)
    denominator = np.asarray(denominator, dtype=float)
    out = np.zeros(np.broadcast(numerator, denominator).shape)
    np.divide(numerator, denominator, out=out, where=denominator > 0)
    return out[()] if out.ndim == 0 else out


def snrs(g: LinkGains, p: SystemParams, p_j=0.0):
    """
    Received SNRs (gamma_SU, gamma_SA, gamma_AU)

    gamma_AU is the jamming SNR at U and scales with p_j.
    """
    gamma_su = p.p_s * g.g_su / p.sigma2
    gamma_sa = p.p_s * g.g_sa / p.sigma2
    gamma_au = np.asarray(p_j, dtype=float) * g.g_au / p.sigma2
    return gamma_su, gamma_sa, gamma_au[()] if gamma_au.ndim == 0 else gamma_au


def rate_summary(g: LinkGains, p: SystemParams) -> RateSummary:
    """Legitimate rate R_U and eavesdropping link rate R_A"""
    gamma_su, gamma_sa, _ = snrs(g, p)
    return RateSummary(
        r_u=float(np.log2(1.0 + gamma_su)),
        r_a_max=float(np.log2(1.0 + gamma_sa)),
        gamma_su=float(gamma_su),
        gamma_sa=float(gamma_sa),
    )


def secrecy_rate_eaves(g: LinkGains, p: SystemParams) -> float:
    """Secrecy rate under eavesdropping: max(0, R_U - R_A)"""
    rates = rate_summary(g, p)
    return max(0.0, rates.r_u - rates.r_a_max)


def secrecy_rate_jam(g: LinkGains, p: SystemParams, p_j):
    """Secrecy rate under jamming: log2(1 + gamma_SU / (1 + gamma_AU))"""
    gamma_su, _, gamma_au = snrs(g, p, p_j)
    return np.log2(1.0 + gamma_su / (1.0 + gamma_au))


def degraded_rate_eaves(g: LinkGains, p: SystemParams) -> float:
    """Degraded secrecy rate under eavesdropping: min(R_A, R_U)"""
    rates = rate_summary(g, p)
    return min(rates.r_a_max, rates.r_u)


def degraded_rate_jam(g: LinkGains, p: SystemParams, p_j):
    """
    Degraded secrecy rate under jamming:
    log2((1 + gamma_SU)(1 + gamma_AU) / (1 + gamma_SU + gamma_AU)),
    which equals R_U - secrecy_rate_jam.
    """
    gamma_su, _, gamma_au = snrs(g, p, p_j)
    # log1p keeps precision when gamma_AU is tiny
    return (
        np.log1p(gamma_su) + np.log1p(gamma_au) - np.log1p(gamma_su + gamma_au)
    ) / np.log(2.0)


def consumption_eaves(p: SystemParams, r_a):
    """Receive-mode consumption P_fr + rho_d * r_A (W)"""
    return p.p_fr + p.rho_d * np.asarray(r_a, dtype=float)[()]


def consumption_jam(p: SystemParams, p_j):
    """Transmit-mode consumption P_ft + P_J / nu (W)"""
    return p.p_ft + np.asarray(p_j, dtype=float)[()] / p.nu


def aee_eaves(g: LinkGains, p: SystemParams, r_a):
    """
    Eavesdropping AEE: min(r_A, R_U) / (P_fr + rho_d * r_A)

    The denominator keeps the raw r_A even above R_U. A zero denominator
    (P_fr = 0 and r_A = 0) gives 0.
    """
    r_u = rate_summary(g, p).r_u
    return _ratio_or_zero(np.minimum(r_a, r_u), consumption_eaves(p, r_a))


def aee_jam(g: LinkGains, p: SystemParams, p_j):
    """
    Jamming AEE: R_DJ / (P_ft + P_J / nu)

    A zero denominator (P_ft = 0 and P_J = 0) gives 0, the limit value.
    """
    return _ratio_or_zero(degraded_rate_jam(g, p, p_j), consumption_jam(p, p_j))


def weighted_consumption(p: SystemParams, d: AttackDecision) -> float:
    """Left-hand side of the total power constraint for a decision"""
    return float(
        d.alpha * consumption_eaves(p, d.r_a)
        + (1.0 - d.alpha) * consumption_jam(p, d.p_j)
    )


def is_within_budget(p: SystemParams, d: AttackDecision) -> bool:
    """True when the decision's weighted consumption is at most P_m"""
    return weighted_consumption(p, d) <= p.p_m


def aee_combined_terms(g: LinkGains, p: SystemParams, alpha, r_a, p_j):
    """
    Time-shared AEE for arrays of (alpha, r_A, P_J)

    [a*min(r_A, R_U) + (1-a)*R_DJ] / [a*(P_fr + rho_d*r_A) + (1-a)*(P_ft + P_J/nu)]
    """
    alpha = np.asarray(alpha, dtype=float)
    r_u = rate_summary(g, p).r_u
    numerator = alpha * np.minimum(r_a, r_u) + (1.0 - alpha) * degraded_rate_jam(g, p, p_j)
    denominator = alpha * consumption_eaves(p, r_a) + (1.0 - alpha) * consumption_jam(p, p_j)
    if np.any(np.asarray(denominator) <= 0):
        raise DomainError("Combined AEE has a zero consumption denominator")
    return numerator / denominator


def aee_combined(g: LinkGains, p: SystemParams, d: AttackDecision) -> float:
    """Time-shared AEE of a decision; alpha in {0, 1} reduces to the single-mode AEE"""
    if d.alpha == 1.0:
        if consumption_eaves(p, d.r_a) <= 0:
            raise DomainError("Combined AEE has a zero consumption denominator")
        return float(aee_eaves(g, p, d.r_a))
    if d.alpha == 0.0:
        if consumption_jam(p, d.p_j) <= 0:
            raise DomainError("Combined AEE has a zero consumption denominator")
        return float(aee_jam(g, p, d.p_j))
    return float(aee_combined_terms(g, p, d.alpha, d.r_a, d.p_j))
