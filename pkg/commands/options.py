"""
Shared Command Options
Global flags collected by the command group and handed to every command
"""

from dataclasses import dataclass

from services.solver_service import GsConfig
from storage.run_config import RunConfig
from utils.errors import ConfigError, DomainError


@dataclass(frozen=True)
class CommandOptions:
    epsilon: float = None
    out: str = None
    workers: int = 1

    def load(self, config_path):
        """Read the run config and resolve solver settings and output path"""
        run_config = RunConfig.from_file(config_path)
        gs_config = run_config.gs_config()
        if self.epsilon is not None:
            try:
                gs_config = GsConfig(epsilon=self.epsilon, max_iter=gs_config.max_iter)
            except DomainError as e:
                raise ConfigError(f"--epsilon: {e}") from None
        out = self.out or run_config.output
        return run_config, gs_config, out
