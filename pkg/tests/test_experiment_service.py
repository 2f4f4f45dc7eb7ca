import math

import numpy as np
import pytest

from services.experiment_service import (
    BenchmarkScheme,
    ExperimentService,
    GridScale,
    SweepParameter,
    SweepRow,
    SweepSpec,
    apply_parameter,
)
from services.solver_service import GsConfig, SolverService
from utils.errors import DomainError, InfeasibleError, ThresholdNotFoundError
from utils.helpers import linear_grid


def _modes(rows):
    return [row.mode for row in rows]


def _default_specs(env_config, refine=1):
    """Default sweep grids, with each step divided by refine"""
    specs = []
    for parameter in SweepParameter:
        spec = SweepSpec.default(parameter, env_config)
        specs.append(SweepSpec(spec.parameter, spec.lo, spec.hi,
                               refine * (spec.points - 1) + 1, spec.scale))
    return specs


class TestSweepSpec:

    def test_linear_values(self):
        spec = SweepSpec(parameter='nu', lo=10.0, hi=90.0, points=17)
        values = spec.values()
        assert len(values) == 17
        assert values[0] == 10.0 and values[-1] == 90.0
        assert values[1] == pytest.approx(15.0)

    def test_log_values(self):
        spec = SweepSpec(parameter='ratio_g_su_g_au', lo=1.0, hi=1000.0, points=4, scale='log')
        assert np.allclose(spec.values(), [1.0, 10.0, 100.0, 1000.0])

    def test_coerces_enums(self):
        spec = SweepSpec(parameter='p_m', lo=0.0, hi=13.0, points=3, scale='linear')
        assert spec.parameter is SweepParameter.P_M
        assert spec.scale is GridScale.LINEAR

    @pytest.mark.parametrize('lo, hi, points, scale', [
        (5.0, 5.0, 3, 'linear'),
        (5.0, 1.0, 3, 'linear'),
        (1.0, 5.0, 1, 'linear'),
        (0.0, 5.0, 3, 'log'),
    ])
    def test_rejects_bad_ranges(self, lo, hi, points, scale):
        with pytest.raises(DomainError):
            SweepSpec(parameter='nu', lo=lo, hi=hi, points=points, scale=scale)

    def test_defaults_from_config(self, env_config):
        assert SweepSpec.default('nu', env_config).points == 17
        assert SweepSpec.default('rho_d', env_config).values()[-1] == 0.0


class TestApplyParameter:

    def test_nu_is_percent(self, default_gains, default_params):
        _, p = apply_parameter(default_gains, default_params, 'nu', 40.0)
        assert p.nu == pytest.approx(0.4)

    def test_powers_are_dbm(self, default_gains, default_params):
        _, p = apply_parameter(default_gains, default_params, 'rho_d', -20.0)
        assert p.rho_d == pytest.approx(1e-5)
        _, p = apply_parameter(default_gains, default_params, 'p_m', 10.0)
        assert p.p_m == pytest.approx(0.01)

    def test_ratios_move_attacker_gains(self, default_gains, default_params):
        g, _ = apply_parameter(default_gains, default_params, 'ratio_g_su_g_sa', 100.0)
        assert g.g_su == default_gains.g_su
        assert g.g_sa == pytest.approx(1e-8)
        assert g.g_au == default_gains.g_au


class TestBenchmark:

    def test_defaults(self, default_gains, default_params):
        bench = ExperimentService.benchmark_aee(default_gains, default_params)
        assert bench.feasible
        assert bench.decision.alpha == 0.5
        assert bench.decision.p_j == pytest.approx(1e-3)
        assert bench.consumption == pytest.approx(2.2568e-3, rel=1e-3)
        assert bench.aee == pytest.approx(5149.0, rel=1e-3)

    def test_low_budget_is_flagged(self, default_gains, default_params):
        bench = ExperimentService.benchmark_aee(default_gains, default_params.evolve(p_m=1e-3))
        assert not bench.feasible

    def test_negative_rate_rule_is_flagged(self, default_gains, default_params):
        scheme = BenchmarkScheme(alpha=0.5, p_j=1e-4)
        bench = ExperimentService.benchmark_aee(default_gains, default_params.evolve(p_fr=0.05), scheme)
        assert not bench.feasible
        assert bench.decision.r_a == 0.0

    def test_optimum_beats_benchmark_at_defaults(self, default_gains, default_params):
        bench = ExperimentService.benchmark_aee(default_gains, default_params)
        result = SolverService.solve_joint(default_gains, default_params)
        gain = 100.0 * (result.aee_joint - bench.aee) / bench.aee
        assert gain == pytest.approx(23.2, abs=0.5)


class TestSweeps:

    def test_nu_sweep(self, default_gains, default_params, env_config):
        spec = SweepSpec.default('nu', env_config)
        rows = ExperimentService.run_sweep(default_gains, default_params, spec, GsConfig())
        assert len(rows) == 17
        assert [row.value for row in rows] == [float(v) for v in spec.values()]
        for row in rows:
            assert row.feasible
            if row.counted:
                assert row.gain_joint_pct >= row.gain_eaves_pct
                assert row.gain_joint_pct >= row.gain_jam_pct

    def test_rho_sweep_switches_mode_once(self, default_gains, default_params, env_config):
        spec = SweepSpec.default('rho_d', env_config)
        modes = _modes(ExperimentService.run_sweep(default_gains, default_params, spec))
        assert modes[0] == 'Eavesdrop'
        assert modes[-1] == 'Jam'
        assert sum(1 for a, b in zip(modes, modes[1:]) if a != b) == 1

    def test_infeasible_rows_are_flagged(self, default_gains, default_params):
        spec = SweepSpec(parameter='p_m', lo=-10.0, hi=13.0, points=3)
        rows = ExperimentService.run_sweep(default_gains, default_params, spec)
        assert not rows[0].feasible
        assert not rows[0].counted
        assert rows[-1].feasible

    def test_workers_preserve_order(self, default_gains, default_params):
        spec = SweepSpec(parameter='nu', lo=10.0, hi=90.0, points=5)
        serial = ExperimentService.run_sweep(default_gains, default_params, spec, workers=1)
        parallel = ExperimentService.run_sweep(default_gains, default_params, spec, workers=2)
        assert serial == parallel


class TestAverageGains:

    def _row(self, name, gains, counted=True):
        return SweepRow(
            parameter=name, value=0.0, aee_benchmark=1.0 if counted else 0.0,
            aee_eaves_opt=1.0, aee_jam_opt=1.0, aee_joint=1.0,
            gain_eaves_pct=gains[0], gain_jam_pct=gains[1], gain_joint_pct=gains[2],
        )

    def test_two_stage_average(self):
        rows = {
            'a': [self._row('a', (10.0, 20.0, 30.0)), self._row('a', (30.0, 40.0, 50.0))],
            'b': [self._row('b', (0.0, 0.0, 10.0))],
        }
        summary = ExperimentService.average_gains(rows)
        assert summary.per_parameter['a'] == (20.0, 30.0, 40.0)
        assert summary.gain_eaves_avg == pytest.approx(10.0)
        assert summary.gain_jam_avg == pytest.approx(15.0)
        assert summary.gain_joint_avg == pytest.approx(25.0)

    def test_uncounted_rows_are_skipped(self):
        rows = {'a': [self._row('a', (10.0, 10.0, 10.0)), self._row('a', (None, None, None), counted=False)]}
        assert ExperimentService.average_gains(rows).gain_eaves_avg == pytest.approx(10.0)

    def test_parameter_without_rows(self):
        rows = {'a': [self._row('a', (None, None, None), counted=False)]}
        with pytest.raises(InfeasibleError, match="'a'"):
            ExperimentService.average_gains(rows)

    def test_small_grid_summary(self, default_gains, default_params):
        specs = [
            SweepSpec('nu', 10.0, 90.0, 5),
            SweepSpec('rho_d', -20.0, 0.0, 5),
            SweepSpec('p_m', 5.0, 13.0, 5),
            SweepSpec('ratio_g_su_g_sa', 1.0, 1000.0, 4, 'log'),
            SweepSpec('ratio_g_su_g_au', 1.0, 1000.0, 4, 'log'),
        ]
        rows_by_parameter, summary = ExperimentService.run_figure4(default_gains, default_params, specs)
        assert set(rows_by_parameter) == {parameter.value for parameter in SweepParameter}
        for value in (summary.gain_eaves_avg, summary.gain_jam_avg, summary.gain_joint_avg):
            assert math.isfinite(value)
        assert summary.gain_joint_avg >= summary.gain_eaves_avg
        assert summary.gain_joint_avg >= summary.gain_jam_avg

    def test_default_grids_match_reference_gains(self, default_gains, default_params, env_config):
        _, summary = ExperimentService.run_figure4(
            default_gains, default_params, _default_specs(env_config)
        )
        averages = (summary.gain_eaves_avg, summary.gain_jam_avg, summary.gain_joint_avg)
        for average, reference in zip(averages, env_config.FIG4_REFERENCE_GAINS):
            assert abs(average - reference) <= env_config.FIG4_TOLERANCE_PCT

    def test_averages_stable_under_finer_grids(self, default_gains, default_params, env_config):
        _, coarse = ExperimentService.run_figure4(
            default_gains, default_params, _default_specs(env_config)
        )
        _, fine = ExperimentService.run_figure4(
            default_gains, default_params, _default_specs(env_config, refine=2)
        )
        assert abs(fine.gain_eaves_avg - coarse.gain_eaves_avg) < 1.0
        assert abs(fine.gain_jam_avg - coarse.gain_jam_avg) < 1.0
        assert abs(fine.gain_joint_avg - coarse.gain_joint_avg) < 1.0


class TestSwitchThresholds:

    def test_defaults_threshold(self, default_gains, default_params):
        threshold = ExperimentService.find_switch_threshold(default_gains, default_params, -20.0, 0.0)
        assert threshold == pytest.approx(-10.56, abs=0.1)

    def test_reference_thresholds(self, default_gains, default_params, env_config):
        rows = ExperimentService.fig3_thresholds(
            default_gains, default_params, env_config.FIG3_CASES, env_config.FIG3_RHO_RANGE_DBM,
            reference=env_config.FIG3_REFERENCE_THRESHOLDS,
        )
        assert len(rows) == 4
        for row in rows:
            assert row.threshold_dbm == pytest.approx(row.reference_dbm, abs=0.5)

    def test_mode_ends_of_range(self, default_gains, default_params, env_config):
        for nu, ratio in env_config.FIG3_CASES:
            g, p = ExperimentService.with_joint_ratio(default_gains, default_params, nu, ratio)
            rows = ExperimentService.fig3_curves(g, p, [(nu, ratio)], [-20.0, 0.0])
            assert [row.mode for row in rows] == ['Eavesdrop', 'Jam']

    def test_modes_split_at_threshold(self, default_gains, default_params, env_config):
        lo, hi = env_config.FIG3_RHO_RANGE_DBM
        resolution = env_config.THRESHOLD_RESOLUTION_DB
        thresholds = {
            (row.nu, row.ratio): row.threshold_dbm
            for row in ExperimentService.fig3_thresholds(
                default_gains, default_params, env_config.FIG3_CASES, (lo, hi),
                resolution_db=resolution,
            )
        }
        curves = ExperimentService.fig3_curves(
            default_gains, default_params, env_config.FIG3_CASES,
            linear_grid(lo, hi, env_config.FIG3_CURVE_POINTS),
        )
        assert len(curves) == len(env_config.FIG3_CASES) * env_config.FIG3_CURVE_POINTS
        for row in curves:
            threshold = thresholds[(row.nu, row.ratio)]
            if row.rho_d_dbm < threshold - resolution:
                assert row.mode == 'Eavesdrop'
            elif row.rho_d_dbm > threshold + resolution:
                assert row.mode == 'Jam'

    def test_no_switch_in_range(self, default_gains, default_params):
        with pytest.raises(ThresholdNotFoundError):
            ExperimentService.find_switch_threshold(default_gains, default_params, -20.0, -15.0)


class TestFigureData:

    def test_fig2a_regimes(self, env_config):
        rows = ExperimentService.fig2a_curves([0.0, 60.0, 100.0], env_config.FIG2A_CASES)
        by_case = {}
        for row in rows:
            by_case.setdefault((row.r_de, row.p_m_over_rho), []).append(row)
        assert [r.r_a_star for r in by_case[(50.0, 100.0)]] == [50.0, 40.0, 0.0]
        assert by_case[(50.0, 100.0)][0].regime == 'ii'
        assert by_case[(100.0, 50.0)][0].regime == 'i'
        assert [r.r_a_star for r in by_case[(100.0, 50.0)]] == [50.0, 0.0, 0.0]

    def test_fig2b_peak_matches_curve(self, default_gains, default_params, env_config):
        lo, hi, points = env_config.FIG2B_AXIS
        rows = ExperimentService.fig2b_curves(
            default_gains, default_params, np.geomspace(lo, hi, points), env_config.FIG2B_CASES
        )
        assert len(rows) == points * len(env_config.FIG2B_CASES)
        for row in rows:
            if row.feasible:
                assert row.aee_jam <= row.peak_aee * (1 + 1e-9)

    def test_fig2b_axis_ends_at_jamming_limit(self, env_config, default_params):
        assert env_config.FIG2B_AXIS[1] == pytest.approx(default_params.p_jm, rel=1e-12)

    def test_fig2b_peak_trends(self, default_gains, default_params, env_config):
        rows = ExperimentService.fig2b_curves(
            default_gains, default_params, [1e-4], env_config.FIG2B_CASES
        )
        peak = {(row.p_ft_dbm, row.ratio_g_su_g_au): row.peak_p_j for row in rows}
        # Stronger A-U link needs less power; higher static cost pushes it up
        assert peak[(-0.33, 10.0)] < peak[(-0.33, 100.0)]
        assert peak[(5.0, 10.0)] < peak[(5.0, 100.0)]
        assert peak[(-0.33, 10.0)] < peak[(5.0, 10.0)]
        assert peak[(-0.33, 100.0)] < peak[(5.0, 100.0)]


class TestApproximationReport:

    def test_defaults(self, default_gains, default_params):
        report = ExperimentService.approximation_report(default_gains, default_params)
        assert report.p_j_approx == pytest.approx(2.718e-6, rel=1e-3)
        assert report.gamma_au_approx == pytest.approx(math.e, rel=1e-6)
        assert report.aee_approx <= report.aee_star * (1 + 1e-9)
        assert not report.in_regime

    def test_empty_bracket(self, default_gains, default_params):
        with pytest.raises(InfeasibleError):
            ExperimentService.approximation_report(default_gains, default_params.evolve(p_jm=0.0))
