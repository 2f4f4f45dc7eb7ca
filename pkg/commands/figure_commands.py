"""
Figure Commands
Datasets for the rate/jamming behaviour plots, the mode-switching
thresholds and the benchmark-gain summary
"""

import click

from config import get_config
from services.experiment_service import ExperimentService, SweepParameter
from storage.csv_writer import (
    FIG2A_SCHEMA,
    FIG2B_SCHEMA,
    FIG3_CURVES_SCHEMA,
    FIG3_SCHEMA,
    SWEEP_SCHEMA,
    sibling_path,
    write_csv,
)
from utils.decorators import handle_command_errors
from utils.helpers import format_gain, linear_grid, log_grid

FIGURE_IDS = ('2a', '2b', '3', '4')


def _figure_2a(run_config, gs_config, out, options, cfg):
    lo, hi, points = cfg.FIG2A_AXIS
    rows = ExperimentService.fig2a_curves(linear_grid(lo, hi, points), cfg.FIG2A_CASES)
    write_csv(FIG2A_SCHEMA, rows, out)


def _figure_2b(run_config, gs_config, out, options, cfg):
    lo, hi, points = cfg.FIG2B_AXIS
    rows = ExperimentService.fig2b_curves(
        run_config.link_gains(),
        run_config.system_params(),
        log_grid(lo, hi, points),
        cfg.FIG2B_CASES,
        gs_config,
    )
    write_csv(FIG2B_SCHEMA, rows, out)
    seen = set()
    for row in rows:
        key = (row.p_ft_dbm, row.ratio_g_su_g_au)
        if key not in seen:
            seen.add(key)
            click.echo(
                f"P_ft={row.p_ft_dbm:g} dBm, g_SU/g_AU={row.ratio_g_su_g_au:g}: "
                f"peak P_J={row.peak_p_j:.4g} W, eta_J={row.peak_aee:.2f}",
                err=True,
            )


def _figure_3(run_config, gs_config, out, options, cfg):
    g, p = run_config.link_gains(), run_config.system_params()
    rows = ExperimentService.fig3_thresholds(
        g, p, cfg.FIG3_CASES, cfg.FIG3_RHO_RANGE_DBM, gs_config,
        cfg.THRESHOLD_RESOLUTION_DB, cfg.FIG3_REFERENCE_THRESHOLDS,
    )
    write_csv(FIG3_SCHEMA, rows, out)
    for row in rows:
        click.echo(
            f"nu={row.nu:g}, ratio={row.ratio:g}: threshold {row.threshold_dbm:.2f} dBm "
            f"(reference {row.reference_dbm:g} dBm)",
            err=True,
        )

    if out is not None:
        lo, hi = cfg.FIG3_RHO_RANGE_DBM
        curves = ExperimentService.fig3_curves(
            g, p, cfg.FIG3_CASES, linear_grid(lo, hi, cfg.FIG3_CURVE_POINTS), gs_config
        )
        write_csv(FIG3_CURVES_SCHEMA, curves, sibling_path(out, '_curves'))


def _figure_4(run_config, gs_config, out, options, cfg):
    specs = [run_config.sweep_spec(parameter) for parameter in SweepParameter]
    rows_by_parameter, summary = ExperimentService.run_figure4(
        run_config.link_gains(),
        run_config.system_params(),
        specs,
        gs_config,
        run_config.benchmark_scheme(),
        options.workers,
    )
    all_rows = [row for rows in rows_by_parameter.values() for row in rows]
    write_csv(SWEEP_SCHEMA, all_rows, out)

    for name, (eaves, jam, joint) in summary.per_parameter.items():
        click.echo(
            f"{name}: eavesdrop {format_gain(eaves)}, jam {format_gain(jam)}, "
            f"joint {format_gain(joint)}",
            err=True,
        )
    reference = cfg.FIG4_REFERENCE_GAINS
    click.echo(
        f"average gain: eavesdrop {format_gain(summary.gain_eaves_avg)}, "
        f"jam {format_gain(summary.gain_jam_avg)}, joint {format_gain(summary.gain_joint_avg)} "
        f"(reference {reference[0]}%, {reference[1]}%, {reference[2]}%)",
        err=True,
    )


FIGURES = {
    '2a': _figure_2a,
    '2b': _figure_2b,
    '3': _figure_3,
    '4': _figure_4,
}


@click.command('figure')
@click.argument('config_path', type=click.Path(dir_okay=False))
@click.argument('figure_id', type=click.Choice(FIGURE_IDS))
@click.pass_obj
@handle_command_errors
def figure(options, config_path, figure_id):
    """Dataset for FIGURE_ID (2a, 2b, 3 or 4)"""
    run_config, gs_config, out = options.load(config_path)
    FIGURES[figure_id](run_config, gs_config, out, options, get_config())
