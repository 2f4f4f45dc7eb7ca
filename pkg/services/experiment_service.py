"""
Experiment Service
Parameter sweeps against the fixed benchmark scheme, mode-switching
thresholds, and the datasets behind the optimization-behaviour plots.
All experiments are deterministic.
"""

import enum
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import bisect

from models.rates import aee_combined, aee_eaves, aee_jam, consumption_jam, rate_summary, weighted_consumption
from models.system import AttackDecision, LinkGains, SystemParams
from services.solver_service import AttackMode, GsConfig, SolverService
from utils.errors import DomainError, InfeasibleError, ThresholdNotFoundError
from utils.helpers import linear_grid, log_grid
from utils.units import dbm_to_watts
from utils.validators import validate_sweep_range

logger = logging.getLogger(__name__)

APPROX_MIN_GAMMA_SU = 1e4
APPROX_MIN_GAMMA_AU = 1e2
APPROX_MIN_P_J_OVER_P_FT = 10.0


class SweepParameter(str, enum.Enum):
    """Parameters varied in the benchmark-gain sweeps"""
    NU = 'nu'                                # percent
    RHO_D = 'rho_d'                          # dBm per bps/Hz
    P_M = 'p_m'                              # dBm
    RATIO_G_SU_G_SA = 'ratio_g_su_g_sa'      # linear
    RATIO_G_SU_G_AU = 'ratio_g_su_g_au'      # linear


class GridScale(str, enum.Enum):
    LINEAR = 'linear'
    LOG = 'log'


@dataclass(frozen=True)
class SweepSpec:
    """Grid over one parameter, in that parameter's natural unit"""
    parameter: SweepParameter
    lo: float
    hi: float
    points: int
    scale: GridScale = GridScale.LINEAR

    def __post_init__(self):
        object.__setattr__(self, 'parameter', SweepParameter(self.parameter))
        object.__setattr__(self, 'scale', GridScale(self.scale))
        if not validate_sweep_range(self.lo, self.hi, self.points):
            raise DomainError(
                f"Invalid sweep range for {self.parameter.value}: "
                f"lo={self.lo!r}, hi={self.hi!r}, points={self.points!r}"
            )
        if self.scale is GridScale.LOG and self.lo <= 0:
            raise DomainError(f"Log-scale sweep needs lo > 0, got {self.lo!r}")

    def values(self):
        """Grid values, lo and hi included"""
        if self.scale is GridScale.LOG:
            return log_grid(self.lo, self.hi, self.points)
        return linear_grid(self.lo, self.hi, self.points)

    @classmethod
    def default(cls, parameter, cfg):
        """Default grid for a parameter from an environment Config class"""
        parameter = SweepParameter(parameter)
        lo, hi, points, scale = cfg.SWEEP_DEFAULTS[parameter.value]
        return cls(parameter=parameter, lo=lo, hi=hi, points=points, scale=scale)


@dataclass(frozen=True)
class BenchmarkScheme:
    """Fixed strategy: alpha = 0.5, P_J = 0 dBm, largest feasible r_A"""
    alpha: float = 0.5
    p_j: float = 1e-3

    def decision(self, g: LinkGains, p: SystemParams):
        """
        Benchmark decision and whether its r_A rule was usable

        r_A = min(log2(1 + gamma_SA), (P_m - P_fr) / rho_d), clamped at 0
        """
        r_a = min(rate_summary(g, p).r_a_max, (p.p_m - p.p_fr) / p.rho_d)
        rule_ok = r_a >= 0
        return AttackDecision(alpha=self.alpha, r_a=max(r_a, 0.0), p_j=self.p_j), rule_ok


@dataclass(frozen=True)
class BenchmarkResult:
    aee: float
    decision: AttackDecision
    consumption: float
    feasible: bool


@dataclass(frozen=True)
class SweepRow:
    """One grid point of a benchmark-gain sweep"""
    parameter: str
    value: float
    aee_benchmark: float
    aee_eaves_opt: float
    aee_jam_opt: float
    aee_joint: float
    gain_eaves_pct: float = None
    gain_jam_pct: float = None
    gain_joint_pct: float = None
    mode: str = None
    alpha: float = 0.0
    r_a: float = 0.0
    p_j: float = 0.0
    feasible: bool = True
    benchmark_feasible: bool = True

    @property
    def counted(self):
        """Row contributes to the average gains"""
        return self.feasible and self.benchmark_feasible and self.aee_benchmark > 0


@dataclass(frozen=True)
class GainSummary:
    """Average percent gains over the benchmark"""
    gain_eaves_avg: float
    gain_jam_avg: float
    gain_joint_avg: float
    per_parameter: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ThresholdRow:
    nu: float
    ratio: float
    threshold_dbm: float
    reference_dbm: float = None


@dataclass(frozen=True)
class Fig2aRow:
    r_de: float
    p_m_over_rho: float
    regime: str
    p_fr_over_rho: float
    r_a_star: float


@dataclass(frozen=True)
class Fig2bRow:
    p_ft_dbm: float
    ratio_g_su_g_au: float
    p_j: float
    aee_jam: float
    feasible: bool
    peak_p_j: float
    peak_aee: float


@dataclass(frozen=True)
class Fig3CurveRow:
    nu: float
    ratio: float
    rho_d_dbm: float
    aee_eaves_opt: float
    aee_jam_opt: float
    mode: str


@dataclass(frozen=True)
class ApproxReport:
    """Closed-form vs searched jamming power for one instance"""
    p_j_approx: float
    p_j_approx_clamped: float
    p_j_star: float
    aee_approx: float
    aee_star: float
    relative_gap: float
    gamma_su: float
    gamma_au_approx: float
    p_j_over_p_ft: float
    in_regime: bool


def apply_parameter(g: LinkGains, p: SystemParams, parameter, value):
    """
    Return (gains, params) with one sweep parameter set from its natural unit.
    Gain ratios move g_SA or g_AU while g_SU stays fixed.
    """
    parameter = SweepParameter(parameter)
    value = float(value)
    if parameter is SweepParameter.NU:
        return g, p.evolve(nu=value / 100.0)
    if parameter is SweepParameter.RHO_D:
        return g, p.evolve(rho_d=dbm_to_watts(value))
    if parameter is SweepParameter.P_M:
        return g, p.evolve(p_m=dbm_to_watts(value))
    if parameter is SweepParameter.RATIO_G_SU_G_SA:
        return g.with_ratios(ratio_su_sa=value), p
    return g.with_ratios(ratio_su_au=value), p


def _gain_pct(optimum, benchmark):
    return 100.0 * (optimum - benchmark) / benchmark


def _evaluate_row(task):
    """Solve one sweep grid point; top-level so worker processes can import it"""
    g, p, parameter, value, cfg, scheme = task
    g, p = apply_parameter(g, p, parameter, value)
    bench = ExperimentService.benchmark_aee(g, p, scheme)

    try:
        result = SolverService.solve_joint(g, p, cfg)
    except InfeasibleError as e:
        logger.warning(f"Sweep {parameter}={value!r}: {e}")
        return SweepRow(
            parameter=parameter, value=value, aee_benchmark=bench.aee,
            aee_eaves_opt=0.0, aee_jam_opt=0.0, aee_joint=0.0,
            feasible=False, benchmark_feasible=bench.feasible,
        )

    gains = (None, None, None)
    if bench.feasible and bench.aee > 0:
        gains = (
            _gain_pct(result.aee_eaves_opt, bench.aee),
            _gain_pct(result.aee_jam_opt, bench.aee),
            _gain_pct(result.aee_joint, bench.aee),
        )

    return SweepRow(
        parameter=parameter,
        value=value,
        aee_benchmark=bench.aee,
        aee_eaves_opt=result.aee_eaves_opt,
        aee_jam_opt=result.aee_jam_opt,
        aee_joint=result.aee_joint,
        gain_eaves_pct=gains[0],
        gain_jam_pct=gains[1],
        gain_joint_pct=gains[2],
        mode=result.mode.value,
        alpha=result.decision.alpha,
        r_a=result.decision.r_a,
        p_j=result.decision.p_j,
        feasible=True,
        benchmark_feasible=bench.feasible,
    )


class ExperimentService:
    """Service for the benchmark comparison and figure datasets"""

    @staticmethod
    def benchmark_aee(g: LinkGains, p: SystemParams, scheme: BenchmarkScheme = None):
        """
        AEE of the fixed benchmark scheme

        Returns:
            BenchmarkResult: AEE, decision, consumption and a feasibility flag
            (False when the r_A rule went negative or the decision breaks
            the power budget)
        """
        scheme = scheme or BenchmarkScheme()
        decision, rule_ok = scheme.decision(g, p)
        consumption = weighted_consumption(p, decision)
        feasible = rule_ok and consumption <= p.p_m
        if not feasible:
            logger.warning(
                f"Benchmark infeasible: consumption {consumption:.6g} W vs "
                f"P_m {p.p_m:.6g} W (r_A rule usable: {rule_ok})"
            )
        return BenchmarkResult(
            aee=aee_combined(g, p, decision),
            decision=decision,
            consumption=consumption,
            feasible=feasible,
        )

    @staticmethod
    def run_sweep(g: LinkGains, p: SystemParams, spec: SweepSpec, cfg: GsConfig = None,
                  scheme: BenchmarkScheme = None, workers=1):
        """
        Evaluate one row per grid point of a sweep

        Rows come back in grid order whatever the number of workers.
        Infeasible rows are flagged, never fatal.

        Args:
            g (LinkGains): Base channel gains
            p (SystemParams): Base parameters
            spec (SweepSpec): Parameter grid
            cfg (GsConfig): Jamming search settings
            scheme (BenchmarkScheme): Benchmark to compare against
            workers (int): Worker processes (1 = in-process)

        Returns:
            list: SweepRow per grid point
        """
        cfg = cfg or GsConfig()
        scheme = scheme or BenchmarkScheme()
        tasks = [
            (g, p, spec.parameter.value, float(value), cfg, scheme)
            for value in spec.values()
        ]

        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                rows = list(executor.map(_evaluate_row, tasks))
        else:
            rows = [_evaluate_row(task) for task in tasks]

        flagged = sum(1 for row in rows if not row.counted)
        logger.info(
            f"Sweep {spec.parameter.value}: {len(rows)} rows, "
            f"{flagged} excluded from averages"
        )
        return rows

    @staticmethod
    def average_gains(rows_by_parameter):
        """
        Two-stage average: mean gain per parameter, then mean across parameters

        Args:
            rows_by_parameter (dict): parameter name -> list of SweepRow

        Returns:
            GainSummary: overall averages plus the per-parameter means

        Raises:
            InfeasibleError: a parameter has no row usable for averaging
        """
        per_parameter = {}
        for name, rows in rows_by_parameter.items():
            counted = [row for row in rows if row.counted]
            if not counted:
                raise InfeasibleError(f"No feasible benchmark rows for parameter '{name}'")
            per_parameter[name] = (
                float(np.mean([row.gain_eaves_pct for row in counted])),
                float(np.mean([row.gain_jam_pct for row in counted])),
                float(np.mean([row.gain_joint_pct for row in counted])),
            )

        if not per_parameter:
            raise InfeasibleError("No sweep rows to average")

        means = np.mean(np.array(list(per_parameter.values())), axis=0)
        return GainSummary(
            gain_eaves_avg=float(means[0]),
            gain_jam_avg=float(means[1]),
            gain_joint_avg=float(means[2]),
            per_parameter=per_parameter,
        )

    @staticmethod
    def run_figure4(g: LinkGains, p: SystemParams, specs, cfg: GsConfig = None,
                    scheme: BenchmarkScheme = None, workers=1):
        """
        All benchmark-gain sweeps and their two-stage average

        Args:
            specs (list): SweepSpec per parameter

        Returns:
            tuple: (dict parameter -> rows, GainSummary)
        """
        rows_by_parameter = {
            spec.parameter.value: ExperimentService.run_sweep(g, p, spec, cfg, scheme, workers)
            for spec in specs
        }
        return rows_by_parameter, ExperimentService.average_gains(rows_by_parameter)

    @staticmethod
    def eaves_aee_at_rho(g: LinkGains, p: SystemParams, rho_d_dbm):
        """Optimal eavesdropping AEE with rho_d given in dBm per bps/Hz"""
        p = p.evolve(rho_d=dbm_to_watts(rho_d_dbm))
        if not SolverService.eaves_feasible(p):
            return 0.0
        return float(aee_eaves(g, p, SolverService.optimal_eaves_rate(g, p)))

    @staticmethod
    def find_switch_threshold(g: LinkGains, p: SystemParams, lo_dbm, hi_dbm,
                              cfg: GsConfig = None, resolution_db=0.01):
        """
        rho_d (dBm per bps/Hz) where optimal eavesdropping and jamming AEE meet

        Eavesdropping wins below the threshold and jamming above it. The
        jamming optimum does not depend on rho_d, so it is solved once and
        the crossing is bracketed by bisection in the dB domain.

        Raises:
            ThresholdNotFoundError: same optimal mode at both ends
        """
        aee_j = SolverService.optimal_jam_power(g, p, cfg or GsConfig()).aee

        def margin(rho_dbm):
            return ExperimentService.eaves_aee_at_rho(g, p, rho_dbm) - aee_j

        m_lo, m_hi = margin(lo_dbm), margin(hi_dbm)
        mode_lo = SolverService.optimize_alpha(m_lo + aee_j, aee_j)
        mode_hi = SolverService.optimize_alpha(m_hi + aee_j, aee_j)
        if mode_lo == mode_hi:
            raise ThresholdNotFoundError(
                f"Optimal mode does not switch for rho_d in [{lo_dbm}, {hi_dbm}] dBm"
            )

        threshold = bisect(margin, lo_dbm, hi_dbm, xtol=resolution_db)
        logger.info(f"Mode switching threshold: rho_d = {threshold:.3f} dBm per bps/Hz")
        return float(threshold)

    @staticmethod
    def with_joint_ratio(g: LinkGains, p: SystemParams, nu, ratio):
        """Case setup for the mode-switching study: g_SU/g_SA = g_SU/g_AU = ratio"""
        return g.with_ratios(ratio_su_sa=ratio, ratio_su_au=ratio), p.evolve(nu=nu)

    @staticmethod
    def fig3_thresholds(g: LinkGains, p: SystemParams, cases, rho_range_dbm,
                        cfg: GsConfig = None, resolution_db=0.01, reference=None):
        """Switching threshold per (nu, ratio) case"""
        reference = list(reference) if reference is not None else [None] * len(cases)
        rows = []
        for (nu, ratio), reference_value in zip(cases, reference):
            case_g, case_p = ExperimentService.with_joint_ratio(g, p, nu, ratio)
            threshold = ExperimentService.find_switch_threshold(
                case_g, case_p, rho_range_dbm[0], rho_range_dbm[1], cfg, resolution_db
            )
            rows.append(ThresholdRow(nu=nu, ratio=ratio, threshold_dbm=threshold,
                                     reference_dbm=reference_value))
        return rows

    @staticmethod
    def fig3_curves(g: LinkGains, p: SystemParams, cases, rho_values_dbm, cfg: GsConfig = None):
        """Optimal eavesdropping and jamming AEE versus rho_d per case"""
        cfg = cfg or GsConfig()
        rows = []
        for nu, ratio in cases:
            case_g, case_p = ExperimentService.with_joint_ratio(g, p, nu, ratio)
            aee_j = SolverService.optimal_jam_power(case_g, case_p, cfg).aee
            for rho_dbm in rho_values_dbm:
                aee_e = ExperimentService.eaves_aee_at_rho(case_g, case_p, float(rho_dbm))
                alpha = SolverService.optimize_alpha(aee_e, aee_j)
                mode = AttackMode.EAVESDROP if alpha == 1.0 else AttackMode.JAM
                rows.append(Fig3CurveRow(nu=nu, ratio=ratio, rho_d_dbm=float(rho_dbm),
                                         aee_eaves_opt=aee_e, aee_jam_opt=aee_j,
                                         mode=mode.value))
        return rows

    @staticmethod
    def fig2a_curves(p_fr_over_rho_values, cases):
        """
        Optimal eavesdropping rate versus P_fr / rho_d

        Args:
            p_fr_over_rho_values: axis values (bps/Hz)
            cases: iterable of (R_DE, P_m / rho_d)

        Returns:
            list: Fig2aRow per (case, axis value)
        """
        rows = []
        for r_de, p_m_over_rho in cases:
            regime = 'i' if r_de >= p_m_over_rho else 'ii'
            for x in p_fr_over_rho_values:
                x = float(x)
                rows.append(Fig2aRow(
                    r_de=r_de,
                    p_m_over_rho=p_m_over_rho,
                    regime=regime,
                    p_fr_over_rho=x,
                    r_a_star=SolverService.eaves_rate_from(r_de, p_m_over_rho, x, 1.0),
                ))
        return rows

    @staticmethod
    def fig2b_curves(g: LinkGains, p: SystemParams, p_j_values, cases, cfg: GsConfig = None):
        """
        Jamming AEE versus P_J per (P_ft dBm, g_SU/g_AU) case, with the
        searched optimum repeated on every row of its curve
        """
        cfg = cfg or GsConfig()
        p_j_values = np.asarray(p_j_values, dtype=float)
        rows = []
        for p_ft_dbm, ratio in cases:
            case_g = g.with_ratios(ratio_su_au=ratio)
            case_p = p.evolve(p_ft=dbm_to_watts(p_ft_dbm))
            peak = SolverService.optimal_jam_power(case_g, case_p, cfg)
            values = aee_jam(case_g, case_p, p_j_values)
            feasible = (p_j_values <= case_p.p_jm) & (consumption_jam(case_p, p_j_values) <= case_p.p_m)
            for p_j, aee, ok in zip(p_j_values, values, feasible):
                rows.append(Fig2bRow(
                    p_ft_dbm=p_ft_dbm,
                    ratio_g_su_g_au=ratio,
                    p_j=float(p_j),
                    aee_jam=float(aee),
                    feasible=bool(ok),
                    peak_p_j=peak.p_j_star,
                    peak_aee=peak.aee,
                ))
        return rows

    @staticmethod
    def approximation_report(g: LinkGains, p: SystemParams, cfg: GsConfig = None):
        """
        Compare the closed-form jamming power with the searched optimum

        The closed form is clamped into the search bracket before its AEE is
        evaluated. Instances outside the asymptotic regime are reported with
        in_regime=False.

        Raises:
            InfeasibleError: the jamming bracket is empty
        """
        exact = SolverService.optimal_jam_power(g, p, cfg or GsConfig())
        if not exact.feasible:
            raise InfeasibleError("Jamming bracket is empty; nothing to approximate")

        approx = SolverService.approx_jam_power(g, p)
        clamped = min(max(approx.p_j, 0.0), exact.bracket_hi)
        aee_hat = float(aee_jam(g, p, clamped))
        gap = abs(aee_hat - exact.aee) / exact.aee if exact.aee > 0 else math.nan

        gamma_su = rate_summary(g, p).gamma_su
        gamma_au = approx.p_j * g.g_au / p.sigma2
        p_ratio = approx.p_j / p.p_ft if p.p_ft > 0 else math.inf
        in_regime = (
            approx.valid
            and gamma_su >= APPROX_MIN_GAMMA_SU
            and gamma_au >= APPROX_MIN_GAMMA_AU
            and p_ratio >= APPROX_MIN_P_J_OVER_P_FT
        )
        if not in_regime:
            logger.warning(
                f"Closed-form jamming power out of regime: gamma_SU={gamma_su:.4g}, "
                f"gamma_AU={gamma_au:.4g}, P_J/P_ft={p_ratio:.4g}"
            )
        return ApproxReport(
            p_j_approx=approx.p_j,
            p_j_approx_clamped=clamped,
            p_j_star=exact.p_j_star,
            aee_approx=aee_hat,
            aee_star=exact.aee,
            relative_gap=gap,
            gamma_su=gamma_su,
            gamma_au_approx=gamma_au,
            p_j_over_p_ft=p_ratio,
            in_regime=in_regime,
        )
