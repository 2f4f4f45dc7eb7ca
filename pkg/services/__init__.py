"""
Services Package
Contains the attack optimizer and the experiment drivers
"""

from services.solver_service import AttackMode, GsConfig, SolverService
from services.experiment_service import ExperimentService

__all__ = [
    'AttackMode',
    'GsConfig',
    'SolverService',
    'ExperimentService'
]
