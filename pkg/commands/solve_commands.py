"""
Solve Commands
Single-instance joint solve and the closed-form jamming power report
"""

import click

from services.experiment_service import ExperimentService
from services.solver_service import SolverService
from storage.csv_writer import APPROX_SCHEMA, SOLVE_SCHEMA, write_csv
from utils.decorators import handle_command_errors
from utils.helpers import format_aee


@click.command('solve')
@click.argument('config_path', type=click.Path(dir_okay=False))
@click.pass_obj
@handle_command_errors
def solve(options, config_path):
    """Jointly optimal attack for the instance in CONFIG_PATH"""
    run_config, gs_config, out = options.load(config_path)
    result = SolverService.solve_joint(
        run_config.link_gains(), run_config.system_params(), gs_config
    )

    record = {
        'mode': result.mode,
        'alpha': result.decision.alpha,
        'r_a': result.decision.r_a,
        'p_j': result.decision.p_j,
        'aee_eaves_opt': result.aee_eaves_opt,
        'aee_jam_opt': result.aee_jam_opt,
        'aee_joint': result.aee_joint,
        'r_a_star': result.r_a_star,
        'p_j_star': result.jam_diag.p_j_star,
        'gs_iterations': result.jam_diag.iterations,
        'bracket_lo': result.jam_diag.bracket_lo,
        'bracket_hi': result.jam_diag.bracket_hi,
        'eaves_feasible': result.eaves_feasible,
        'jam_feasible': result.jam_diag.feasible,
    }
    write_csv(SOLVE_SCHEMA, [record], out)

    d = result.decision
    click.echo(
        f"mode={result.mode.value} alpha={d.alpha:g} r_a={d.r_a:.6g} bps/Hz "
        f"p_j={d.p_j:.6g} W",
        err=True,
    )
    click.echo(
        f"eta_E={format_aee(result.aee_eaves_opt)} eta_J={format_aee(result.aee_jam_opt)} "
        f"eta={format_aee(result.aee_joint)} (bps/Hz per W); "
        f"GS iterations={result.jam_diag.iterations}",
        err=True,
    )


@click.command('approx')
@click.argument('config_path', type=click.Path(dir_okay=False))
@click.pass_obj
@handle_command_errors
def approx(options, config_path):
    """Closed-form vs searched jamming power for CONFIG_PATH"""
    run_config, gs_config, out = options.load(config_path)
    report = ExperimentService.approximation_report(
        run_config.link_gains(), run_config.system_params(), gs_config
    )
    write_csv(APPROX_SCHEMA, [report], out)
    regime = 'in regime' if report.in_regime else 'out of regime'
    click.echo(f"relative AEE gap {report.relative_gap:.3%} ({regime})", err=True)
