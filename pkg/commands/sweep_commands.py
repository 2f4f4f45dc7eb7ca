"""
Sweep Commands
Benchmark-gain sweep over one parameter
"""

import click

from services.experiment_service import ExperimentService
from storage.csv_writer import SWEEP_SCHEMA, write_csv
from utils.decorators import handle_command_errors
from utils.errors import InfeasibleError
from utils.helpers import format_gain


@click.command('sweep')
@click.argument('config_path', type=click.Path(dir_okay=False))
@click.argument('parameter')
@click.pass_obj
@handle_command_errors
def sweep(options, config_path, parameter):
    """Sweep PARAMETER and compare optimized AEE with the benchmark"""
    run_config, gs_config, out = options.load(config_path)
    spec = run_config.sweep_spec(parameter)

    rows = ExperimentService.run_sweep(
        run_config.link_gains(),
        run_config.system_params(),
        spec,
        gs_config,
        run_config.benchmark_scheme(),
        options.workers,
    )
    write_csv(SWEEP_SCHEMA, rows, out)

    try:
        summary = ExperimentService.average_gains({spec.parameter.value: rows})
    except InfeasibleError as e:
        click.echo(f"No averages: {e}", err=True)
        return
    click.echo(
        f"{spec.parameter.value}: average gain eavesdrop {format_gain(summary.gain_eaves_avg)}, "
        f"jam {format_gain(summary.gain_jam_avg)}, joint {format_gain(summary.gain_joint_avg)}",
        err=True,
    )
