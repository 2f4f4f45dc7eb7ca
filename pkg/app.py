"""
Hybrid Attack AEE Optimizer - Main Application Entry Point
Builds the command group, configures logging and registers the commands

Usage:
    python app.py solve configs/defaults.env
    python app.py --out results/nu.csv sweep configs/defaults.env nu
    python app.py figure configs/defaults.env 4
"""

import logging

import click

from commands.options import CommandOptions
from config import get_config


def configure_logging(cfg=None):
    """Send log records to stderr at the configured level"""
    cfg = cfg or get_config()
    logging.basicConfig(level=getattr(logging, str(cfg.LOG_LEVEL).upper(), logging.INFO),
                        format=cfg.LOG_FORMAT)


@click.group()
@click.option('--epsilon', type=float, default=None,
              help='Golden-section tolerance on P_J in watts.')
@click.option('--out', type=click.Path(dir_okay=False), default=None,
              help='Write the CSV dataset here instead of stdout.')
@click.option('--workers', type=click.IntRange(min=1), default=None,
              help='Worker processes for sweep rows.')
@click.pass_context
def cli(ctx, epsilon, out, workers):
    """Energy-efficient hybrid eavesdrop/jam attack optimizer"""
    cfg = get_config()
    configure_logging(cfg)
    ctx.obj = CommandOptions(
        epsilon=epsilon,
        out=out,
        workers=workers if workers is not None else cfg.SWEEP_WORKERS,
    )


# ===================================================================
# REGISTER COMMANDS
# ===================================================================

from commands.solve_commands import solve, approx
from commands.sweep_commands import sweep
from commands.figure_commands import figure

cli.add_command(solve)
cli.add_command(sweep)
cli.add_command(figure)
cli.add_command(approx)


if __name__ == '__main__':
    cli()
