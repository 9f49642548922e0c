import logging


class Config:
    """Base configuration class"""

    DEBUG = False
    TESTING = False

    # Enumeration
    # Largest n - n0 for which isotropy vectors are searched exhaustively
    ENUMERATION_CAP = 24

    # Report output
    JSON_INDENT = 2
    JSON_SORT_KEYS = True

    # Logging Configuration
    LOG_LEVEL = logging.WARNING
    LOG_FILE = None
    LOG_MAX_BYTES = 10240000
    LOG_BACKUP_COUNT = 10
    LOG_FORMAT = '%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]'

    # Invariant suite (orbimod check)
    CHECK_SEED = 20240917
    CHECK_MAX_GENUS = 10
    CHECK_MAX_POINTS = 8
    CHECK_MAX_ALPHA = 12
    CHECK_MAX_ZERO_GENUS_POINTS = 10
    CHECK_MAX_EVEN_POINTS = 10
    CHECK_SAMPLES = {
        'riemann_roch': 200,
        'serre_duality': 1000,
        'stratum_identity': 100,
        'index_zero': 100,
        'point_case': 1,
        'poincare_assembly': 1,
        'hyperelliptic_dimension': 1,
        'reducibility': 500,
        'spectral_consistency': 200,
        'milnor_wood': 100,
        'real_components': 100,
        'roots_count': 11,
    }


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True


class ProductionConfig(Config):
    """Production configuration"""
    DEBUG = False
    LOG_LEVEL = logging.INFO
    LOG_FILE = 'logs/orbimod.log'


class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True
    CHECK_MAX_GENUS = 4
    CHECK_MAX_POINTS = 6
    CHECK_MAX_ZERO_GENUS_POINTS = 8
    CHECK_SAMPLES = {
        'riemann_roch': 20,
        'serre_duality': 50,
        'stratum_identity': 10,
        'index_zero': 10,
        'point_case': 1,
        'poincare_assembly': 1,
        'hyperelliptic_dimension': 1,
        'reducibility': 30,
        'spectral_consistency': 20,
        'milnor_wood': 10,
        'real_components': 10,
        'roots_count': 6,
    }


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}
