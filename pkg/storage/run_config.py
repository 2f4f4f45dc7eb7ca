"""
Run Configuration
Flat KEY=value files in user units (dBm, dB, percent), converted once to
the linear-unit model types.

Example file:
    p_s_dbm=10
    g_su_db=-60
    nu=70
    sweep_nu=10,90,17,linear
"""

import logging
from dataclasses import dataclass, field

from dotenv import dotenv_values

from config import get_config
from models.system import LinkGains, SystemParams
from services.experiment_service import BenchmarkScheme, SweepParameter, SweepSpec
from services.solver_service import GsConfig
from utils.errors import ConfigError, DomainError
from utils.units import db_to_linear, dbm_to_watts
from utils.validators import validate_finite

logger = logging.getLogger(__name__)

SYSTEM_KEYS = (
    'p_s_dbm', 'p_jm_dbm', 'p_m_dbm', 'g_su_db', 'g_sa_db', 'g_au_db',
    'sigma2_dbm', 'nu', 'p_ft_dbm', 'p_fr_dbm', 'rho_d_dbm_per_rate',
)
SOLVER_KEYS = ('gs_epsilon', 'gs_max_iter')
EXTRA_KEYS = ('benchmark_p_j_dbm', 'output')
SWEEP_KEYS = tuple(f"sweep_{parameter.value}" for parameter in SweepParameter)
KNOWN_KEYS = frozenset(SYSTEM_KEYS + SOLVER_KEYS + EXTRA_KEYS + SWEEP_KEYS)


def _parse_float(key, raw):
    try:
        value = float(raw)
    except (TypeError, ValueError):
        raise ConfigError(f"'{key}' must be a number, got {raw!r}") from None
    if not validate_finite(value):
        raise ConfigError(f"'{key}' must be finite, got {raw!r}")
    return value


def _parse_int(key, raw):
    value = _parse_float(key, raw)
    if not value.is_integer():
        raise ConfigError(f"'{key}' must be an integer, got {raw!r}")
    return int(value)


def _parse_sweep(key, raw, parameter):
    parts = [part.strip() for part in (raw or '').split(',')]
    if len(parts) not in (3, 4):
        raise ConfigError(f"'{key}' must be 'lo,hi,points[,linear|log]', got {raw!r}")
    lo = _parse_float(key, parts[0])
    hi = _parse_float(key, parts[1])
    try:
        points = int(parts[2])
    except ValueError:
        raise ConfigError(f"'{key}' points must be an integer, got {parts[2]!r}") from None
    scale = parts[3] if len(parts) == 4 else 'linear'
    try:
        return SweepSpec(parameter=parameter, lo=lo, hi=hi, points=points, scale=scale)
    except (DomainError, ValueError) as e:
        raise ConfigError(f"'{key}': {e}") from None


@dataclass(frozen=True)
class RunConfig:
    """Parsed run configuration in user units"""
    values: dict
    gs_epsilon: float
    gs_max_iter: int
    benchmark_p_j_dbm: float
    output: str = None
    sweeps: dict = field(default_factory=dict)

    @classmethod
    def from_mapping(cls, raw, env_config=None):
        """
        Build from a key -> string mapping

        Raises:
            ConfigError: unknown key, bad number, or out-of-range value
        """
        env_config = env_config or get_config()
        unknown = sorted(set(raw) - KNOWN_KEYS)
        if unknown:
            raise ConfigError(f"Unknown config keys: {', '.join(unknown)}")

        values = dict(env_config.DEFAULT_PARAMETERS)
        for key in SYSTEM_KEYS:
            if raw.get(key) is not None:
                values[key] = _parse_float(key, raw[key])
        if not 0 < values['nu'] <= 100:
            raise ConfigError(f"'nu' is a percentage in (0, 100], got {values['nu']!r}")

        gs_epsilon = env_config.GS_EPSILON
        if raw.get('gs_epsilon') is not None:
            gs_epsilon = _parse_float('gs_epsilon', raw['gs_epsilon'])
        gs_max_iter = env_config.GS_MAX_ITER
        if raw.get('gs_max_iter') is not None:
            gs_max_iter = _parse_int('gs_max_iter', raw['gs_max_iter'])

        benchmark_p_j_dbm = env_config.BENCHMARK_P_J_DBM
        if raw.get('benchmark_p_j_dbm') is not None:
            benchmark_p_j_dbm = _parse_float('benchmark_p_j_dbm', raw['benchmark_p_j_dbm'])

        sweeps = {}
        for parameter in SweepParameter:
            key = f"sweep_{parameter.value}"
            if raw.get(key) is not None:
                sweeps[parameter.value] = _parse_sweep(key, raw[key], parameter)

        run_config = cls(
            values=values,
            gs_epsilon=gs_epsilon,
            gs_max_iter=gs_max_iter,
            benchmark_p_j_dbm=benchmark_p_j_dbm,
            output=raw.get('output') or None,
            sweeps=sweeps,
        )
        # Fail at ingestion, not mid-solve
        run_config.link_gains()
        run_config.system_params()
        run_config.gs_config()
        return run_config

    @classmethod
    def from_file(cls, path, env_config=None):
        """Read a KEY=value run config file"""
        try:
            with open(path, encoding='utf-8') as handle:
                raw = dotenv_values(stream=handle)
        except OSError as e:
            raise ConfigError(f"Cannot read config file {path}: {e}") from None
        logger.info(f"Loaded run config {path} ({len(raw)} keys)")
        return cls.from_mapping(raw, env_config)

    def link_gains(self):
        """Channel gains in linear scale"""
        try:
            return LinkGains(
                g_su=db_to_linear(self.values['g_su_db']),
                g_sa=db_to_linear(self.values['g_sa_db']),
                g_au=db_to_linear(self.values['g_au_db']),
            )
        except DomainError as e:
            raise ConfigError(str(e)) from None

    def system_params(self):
        """System parameters in watts"""
        v = self.values
        try:
            return SystemParams(
                p_s=dbm_to_watts(v['p_s_dbm']),
                sigma2=dbm_to_watts(v['sigma2_dbm']),
                p_jm=dbm_to_watts(v['p_jm_dbm']),
                p_m=dbm_to_watts(v['p_m_dbm']),
                p_fr=dbm_to_watts(v['p_fr_dbm']),
                p_ft=dbm_to_watts(v['p_ft_dbm']),
                rho_d=dbm_to_watts(v['rho_d_dbm_per_rate']),
                nu=v['nu'] / 100.0,
            )
        except DomainError as e:
            raise ConfigError(str(e)) from None

    def gs_config(self):
        try:
            return GsConfig(epsilon=self.gs_epsilon, max_iter=self.gs_max_iter)
        except DomainError as e:
            raise ConfigError(str(e)) from None

    def benchmark_scheme(self, env_config=None):
        env_config = env_config or get_config()
        return BenchmarkScheme(
            alpha=env_config.BENCHMARK_ALPHA,
            p_j=dbm_to_watts(self.benchmark_p_j_dbm),
        )

    def sweep_spec(self, parameter, env_config=None):
        """Sweep grid from the file, else the configured default"""
        try:
            parameter = SweepParameter(parameter)
        except ValueError:
            names = ', '.join(p.value for p in SweepParameter)
            raise ConfigError(f"Unknown sweep parameter {parameter!r}; expected one of {names}") from None
        if parameter.value in self.sweeps:
            return self.sweeps[parameter.value]
        return SweepSpec.default(parameter, env_config or get_config())
