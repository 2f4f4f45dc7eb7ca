"""
Configuration file for the Hybrid Attack AEE Optimizer
Contains solver settings, default model parameters and experiment grids
"""

import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


class Config:
    """Base configuration class"""

    # ===================================================================
    # LOGGING SETTINGS
    # ===================================================================

    LOG_LEVEL = os.environ.get('AEE_LOG_LEVEL', 'INFO')
    LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'

    # ===================================================================
    # SOLVER SETTINGS
    # ===================================================================

    # Golden-section bracket tolerance on P_J, in watts
    GS_EPSILON = float(os.environ.get('AEE_GS_EPSILON', '1e-9'))
    # Far above the analytic bound; only reached on NaN objectives
    GS_MAX_ITER = 200

    LAMBERT_W_MAX_ITER = 50
    LAMBERT_W_TOL = 1e-12

    # ===================================================================
    # DEFAULT MODEL PARAMETERS (user units)
    # ===================================================================

    # Keys double as the accepted run-config keys
    DEFAULT_PARAMETERS = {
        'p_s_dbm': 10.0,
        'p_jm_dbm': 13.0,
        'p_m_dbm': 13.0,
        'g_su_db': -60.0,
        'g_sa_db': -70.0,
        'g_au_db': -70.0,
        'sigma2_dbm': -100.0,
        'nu': 70.0,                     # amplifier efficiency, percent
        'p_ft_dbm': -0.33,
        'p_fr_dbm': -0.33,
        'rho_d_dbm_per_rate': -10.33,   # dBm per bps/Hz
    }

    # ===================================================================
    # BENCHMARK SETTINGS
    # ===================================================================

    BENCHMARK_ALPHA = 0.5
    BENCHMARK_P_J_DBM = 0.0

    # ===================================================================
    # SWEEP SETTINGS
    # ===================================================================

    # parameter -> (lo, hi, points, scale) in the parameter's natural unit
    SWEEP_DEFAULTS = {
        'nu': (10.0, 90.0, 17, 'linear'),                 # percent
        'rho_d': (-20.0, 0.0, 41, 'linear'),              # dBm per bps/Hz
        'p_m': (0.0, 13.0, 27, 'linear'),                 # dBm
        'ratio_g_su_g_sa': (1.0, 1000.0, 31, 'log'),
        'ratio_g_su_g_au': (1.0, 1000.0, 31, 'log'),
    }

    # Number of worker processes for sweep rows (1 = in-process)
    SWEEP_WORKERS = int(os.environ.get('AEE_SWEEP_WORKERS', '1'))

    # ===================================================================
    # FIGURE SETTINGS
    # ===================================================================

    # figure 2a: (R_DE, P_m / rho_d) cases, axis P_fr / rho_d (bps/Hz)
    FIG2A_CASES = [(50.0, 100.0), (50.0, 200.0), (100.0, 50.0), (100.0, 80.0)]
    FIG2A_AXIS = (0.0, 100.0, 101)

    # figure 2b: (P_ft dBm, g_SU/g_AU) cases, P_J axis in watts (log-spaced)
    FIG2B_CASES = [(-0.33, 10.0), (5.0, 10.0), (-0.33, 100.0), (5.0, 100.0)]
    FIG2B_AXIS = (1e-6, 10 ** ((DEFAULT_PARAMETERS['p_jm_dbm'] - 30.0) / 10.0), 200)

    # figure 3: (nu, g_SU/g_SA = g_SU/g_AU) cases and reference thresholds (dBm)
    FIG3_CASES = [(0.1, 10.0), (0.1, 100.0), (0.7, 10.0), (0.7, 100.0)]
    FIG3_REFERENCE_THRESHOLDS = [-7.5, -3.5, -10.5, -7.42]
    FIG3_RHO_RANGE_DBM = (-20.0, 0.0)
    FIG3_CURVE_POINTS = 41
    THRESHOLD_RESOLUTION_DB = 0.01

    # figure 4: reference average gains (eavesdrop, jam, joint), percent
    FIG4_REFERENCE_GAINS = (29.5, 31.5, 45.0)
    FIG4_TOLERANCE_PCT = 6.0

    # ===================================================================
    # ENVIRONMENT-SPECIFIC SETTINGS
    # ===================================================================

    DEBUG = False
    TESTING = False


class DevelopmentConfig(Config):
    """Development environment configuration"""
    DEBUG = True
    TESTING = False


class TestingConfig(Config):
    """Testing environment configuration"""
    DEBUG = True
    TESTING = True
    LOG_LEVEL = 'WARNING'
    SWEEP_WORKERS = 1  # Fixed for test determinism


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}


def get_config():
    """
    Get configuration based on environment variable
    Returns development config by default
    """
    env = os.environ.get('AEE_ENV', 'development')
    return config.get(env, config['default'])
