"""
Shared pytest fixtures
"""

import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
os.environ['AEE_ENV'] = 'testing'

from config import get_config  # noqa: E402
from models.system import LinkGains  # noqa: E402
from services.solver_service import GsConfig  # noqa: E402
from storage.run_config import RunConfig  # noqa: E402
from utils.units import db_to_linear, dbm_to_watts  # noqa: E402

RANDOM_SEED = 20240611
RANDOM_INSTANCE_COUNT = 200


@pytest.fixture(scope='session')
def env_config():
    return get_config()


@pytest.fixture(scope='session')
def default_run_config():
    return RunConfig.from_mapping({})


@pytest.fixture(scope='session')
def default_gains(default_run_config):
    return default_run_config.link_gains()


@pytest.fixture(scope='session')
def default_params(default_run_config):
    return default_run_config.system_params()


@pytest.fixture
def gs_config():
    return GsConfig(epsilon=1e-12, max_iter=200)


@pytest.fixture(scope='session')
def random_instances(default_params):
    """Seeded feasible instances: gains -90..-50 dB, powers 0..20 dBm, nu 0.1..0.9"""
    rng = np.random.default_rng(RANDOM_SEED)
    instances = []
    for _ in range(RANDOM_INSTANCE_COUNT):
        g_su, g_sa, g_au = (float(db_to_linear(x)) for x in rng.uniform(-90.0, -50.0, 3))
        p_s, p_m, p_jm = (float(dbm_to_watts(x)) for x in rng.uniform(0.0, 20.0, 3))
        nu = float(rng.uniform(0.1, 0.9))
        instances.append((
            LinkGains(g_su=g_su, g_sa=g_sa, g_au=g_au),
            default_params.evolve(p_s=p_s, p_m=p_m, p_jm=p_jm, nu=nu),
        ))
    return instances


@pytest.fixture
def config_file(tmp_path):
    """Factory writing a KEY=value run config into tmp_path"""
    def _write(name='run.env', **values):
        path = tmp_path / name
        lines = ['# test run config']
        lines += [f"{key}={value}" for key, value in values.items()]
        path.write_text('\n'.join(lines) + '\n', encoding='utf-8')
        return str(path)
    return _write
