"""
Solver Service
Jointly optimal hybrid attack: mode selection, eavesdropping rate and
jamming power.

The joint problem splits into three parts. For any fixed (r_A, P_J) the
time-shared AEE is monotone in alpha, so a pure mode is optimal. The
eavesdropping AEE increases with r_A up to R_U, so the optimal rate sits on
a constraint boundary. The jamming AEE is pseudo-concave in P_J, so a
golden-section search on the feasible bracket finds its unique maximum.
"""

import enum
import logging
import math
from dataclasses import dataclass, field

from config import get_config
from models.rates import (
    aee_eaves,
    aee_jam,
    degraded_rate_eaves,
    rate_summary,
    weighted_consumption,
)
from models.system import AttackDecision, LinkGains, SystemParams
from utils.errors import DomainError, InfeasibleError
from utils.lambertw import lambert_w0
from utils.search import golden_section_max
from utils.validators import validate_finite, validate_positive

logger = logging.getLogger(__name__)


class AttackMode(str, enum.Enum):
    """Pure attack mode selected by the joint solution"""
    EAVESDROP = 'Eavesdrop'
    JAM = 'Jam'


@dataclass(frozen=True)
class GsConfig:
    """Golden-section settings for the jamming-power search"""
    epsilon: float = 1e-9
    max_iter: int = 200

    def __post_init__(self):
        if not validate_positive(self.epsilon):
            raise DomainError(f"epsilon must be > 0, got {self.epsilon!r}")
        if not isinstance(self.max_iter, int) or self.max_iter < 1:
            raise DomainError(f"max_iter must be an integer >= 1, got {self.max_iter!r}")

    @classmethod
    def from_config(cls, cfg):
        """Build from an environment Config class"""
        return cls(epsilon=cfg.GS_EPSILON, max_iter=cfg.GS_MAX_ITER)


@dataclass(frozen=True)
class JamSolve:
    """Optimal jamming power with search diagnostics"""
    p_j_star: float
    aee: float
    bracket_lo: float
    bracket_hi: float
    iterations: int
    feasible: bool = True


@dataclass(frozen=True)
class ApproxJamPower:
    """Closed-form jamming power and whether gamma_SU allows it"""
    p_j: float
    w: float
    valid: bool


@dataclass(frozen=True)
class SolveResult:
    """Jointly optimal decision and the per-mode optima behind it"""
    decision: AttackDecision
    aee_eaves_opt: float
    aee_jam_opt: float
    aee_joint: float
    mode: AttackMode
    jam_diag: JamSolve
    r_a_star: float
    eaves_feasible: bool = True
    notes: tuple = field(default_factory=tuple)


class SolverService:
    """Service for solving the attacker's AEE maximization"""

    @staticmethod
    def eaves_feasible(p: SystemParams):
        """Eavesdropping fits the budget when P_m >= P_fr"""
        return p.p_m >= p.p_fr

    @staticmethod
    def eaves_rate_from(r_de, p_m, p_fr, rho_d):
        """
        min(R_DE, (P_m - P_fr) / rho_d), clamped at 0

        Works in any consistent unit system; with rho_d = 1 the powers
        are read in bps/Hz (as in the P_fr/rho_d axis of the rate plots).
        """
        return max(0.0, min(r_de, (p_m - p_fr) / rho_d))

    @staticmethod
    def optimal_eaves_rate(g: LinkGains, p: SystemParams):
        """
        Optimal eavesdropping rate r*_A

        The AEE rises with r_A up to R_U and falls after it, so the optimum
        is the tightest of the rate limit R_DE and the budget limit.

        Returns:
            float: r*_A in bps/Hz (0.0 when eavesdropping is infeasible)
        """
        if not SolverService.eaves_feasible(p):
            logger.warning(
                f"Eavesdropping infeasible: P_m={p.p_m!r} W below P_fr={p.p_fr!r} W"
            )
            return 0.0
        return SolverService.eaves_rate_from(
            degraded_rate_eaves(g, p), p.p_m, p.p_fr, p.rho_d
        )

    @staticmethod
    def jam_bracket(p: SystemParams):
        """Upper end of the P_J search bracket: min(P_Jm, nu * (P_m - P_ft))"""
        return min(p.p_jm, p.nu * (p.p_m - p.p_ft))

    @staticmethod
    def optimal_jam_power(g: LinkGains, p: SystemParams, cfg: GsConfig = None):
        """
        Optimal jamming power P*_J by golden-section search

        Args:
            g (LinkGains): Channel gains
            p (SystemParams): System parameters
            cfg (GsConfig): Search tolerance and cap

        Returns:
            JamSolve: P*_J, its AEE, the bracket and iterations used;
            feasible=False with zeros when the bracket is empty
        """
        cfg = cfg or GsConfig()
        upper = SolverService.jam_bracket(p)

        if p.p_m < p.p_ft or upper <= 0:
            logger.warning(
                f"Jamming infeasible: bracket upper end {upper!r} W "
                f"(P_m={p.p_m!r}, P_ft={p.p_ft!r}, P_Jm={p.p_jm!r})"
            )
            return JamSolve(
                p_j_star=0.0,
                aee=0.0,
                bracket_lo=0.0,
                bracket_hi=max(upper, 0.0),
                iterations=0,
                feasible=False,
            )

        search = golden_section_max(
            lambda p_j: aee_jam(g, p, p_j), 0.0, upper, cfg.epsilon, cfg.max_iter
        )
        return JamSolve(
            p_j_star=search.x,
            aee=search.fx,
            bracket_lo=0.0,
            bracket_hi=upper,
            iterations=search.iterations,
        )

    @staticmethod
    def approx_jam_power(g: LinkGains, p: SystemParams):
        """
        Closed-form jamming power for gamma_SU >> 1, gamma_AU >> 1, P_J >> P_ft

        P_S g_SU W(e/gamma_SU) / (g_AU [1 - W(e/gamma_SU)]), un-clamped.
        Only meaningful for gamma_SU > 1, where W(e/gamma_SU) < 1; outside
        that the result carries valid=False and p_j = inf.
        """
        gamma_su = rate_summary(g, p).gamma_su
        env = get_config()
        w = lambert_w0(math.e / gamma_su, tol=env.LAMBERT_W_TOL, max_iter=env.LAMBERT_W_MAX_ITER).w
        if gamma_su <= 1.0 or w >= 1.0:
            logger.warning(f"Closed-form jamming power outside its regime: gamma_SU={gamma_su!r}")
            return ApproxJamPower(p_j=math.inf, w=w, valid=False)
        p_j = p.p_s * g.g_su * w / (g.g_au * (1.0 - w))
        return ApproxJamPower(p_j=p_j, w=w, valid=True)

    @staticmethod
    def optimize_alpha(aee_e, aee_j):
        """
        Optimal mode fraction: 1 (eavesdrop) only if eta_E > eta_J, else 0 (jam)
        """
        if not (validate_finite(aee_e) and validate_finite(aee_j)):
            raise DomainError(f"AEE values must be finite, got {aee_e!r}, {aee_j!r}")
        return 1.0 if aee_e > aee_j else 0.0

    @staticmethod
    def solve_joint(g: LinkGains, p: SystemParams, cfg: GsConfig = None):
        """
        Jointly optimal (alpha, r_A, P_J)

        Solves both single-mode problems, keeps the better one and returns
        (1, r*_A, 0) or (0, 0, P*_J).

        Raises:
            InfeasibleError: P_m is below both static consumptions, or
            eavesdropping is infeasible and the jamming bracket is empty
        """
        cfg = cfg or GsConfig()

        if p.p_m < min(p.p_fr, p.p_ft):
            raise InfeasibleError(
                f"Power budget P_m={p.p_m!r} W is below both static consumptions "
                f"(P_fr={p.p_fr!r} W, P_ft={p.p_ft!r} W)"
            )

        eaves_ok = SolverService.eaves_feasible(p)
        r_a_star = SolverService.optimal_eaves_rate(g, p)
        aee_e = float(aee_eaves(g, p, r_a_star)) if eaves_ok else 0.0

        jam = SolverService.optimal_jam_power(g, p, cfg)
        if not eaves_ok and not jam.feasible:
            raise InfeasibleError(
                f"Power budget P_m={p.p_m!r} W is below P_fr={p.p_fr!r} W and "
                f"the jamming bracket is empty (P_Jm={p.p_jm!r} W)"
            )

        if not jam.feasible:
            alpha = 1.0
        elif not eaves_ok:
            alpha = 0.0
        else:
            alpha = SolverService.optimize_alpha(aee_e, jam.aee)

        if alpha == 1.0:
            decision = AttackDecision(alpha=1.0, r_a=r_a_star, p_j=0.0)
            mode = AttackMode.EAVESDROP
        else:
            decision = AttackDecision(alpha=0.0, r_a=0.0, p_j=jam.p_j_star)
            mode = AttackMode.JAM

        notes = []
        if not eaves_ok:
            notes.append('eavesdropping infeasible')
        if not jam.feasible:
            notes.append('jamming infeasible')

        consumption = weighted_consumption(p, decision)
        logger.info(
            f"Joint solve: mode={mode.value}, eta_E={aee_e:.6g}, eta_J={jam.aee:.6g}, "
            f"consumption={consumption:.6g} W, GS iterations={jam.iterations}"
        )
        return SolveResult(
            decision=decision,
            aee_eaves_opt=aee_e,
            aee_jam_opt=jam.aee,
            aee_joint=max(aee_e, jam.aee),
            mode=mode,
            jam_diag=jam,
            r_a_star=r_a_star,
            eaves_feasible=eaves_ok,
            notes=tuple(notes),
        )
