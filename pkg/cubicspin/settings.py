"""
Django settings for the cubicspin project.
"""

from pathlib import Path

from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = config('SECRET_KEY', default='cubicspin-local-only')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []

# Application definition
INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'arith_core',
    'gaussian_orders',
    'eisenstein',
    'spin',
    'cm_ap',
    'experiments',
]

# Nothing is persisted in a database; scans are cached as checksummed CSV.
DATABASES = {}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

USE_TZ = True
TIME_ZONE = 'UTC'

# Scan harness
SCAN_WORKERS = config('SCAN_WORKERS', default=1, cast=int)
SCAN_BLOCK_SIZE = config('SCAN_BLOCK_SIZE', default=100_000, cast=int)
SIEVE_SEGMENT_SIZE = config('SIEVE_SEGMENT_SIZE', default=1_000_000, cast=int)

# Eisenstein factorization
FACTOR_TRIAL_LIMIT = config('FACTOR_TRIAL_LIMIT', default=1_000_000, cast=int)

# Point counting oracle
POINT_COUNT_LIMIT = config('POINT_COUNT_LIMIT', default=1_000_000, cast=int)
POINT_COUNT_EXHAUSTIVE_LIMIT = config('POINT_COUNT_EXHAUSTIVE_LIMIT', default=10_000, cast=int)
POINT_COUNT_SAMPLE_MODULUS = config('POINT_COUNT_SAMPLE_MODULUS', default=97, cast=int)

# Property suites
VERIFY_DEFAULT_SEED = config('VERIFY_DEFAULT_SEED', default=1, cast=int)
VERIFY_SAMPLE_RADIUS = config('VERIFY_SAMPLE_RADIUS', default=30, cast=int)

CACHE_DIR = Path(config('CACHE_DIR', default=str(BASE_DIR / 'cache')))

LOG_LEVEL = config('LOG_LEVEL', default='INFO')

# Logging
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'file': {
            'level': 'INFO',
            'class': 'logging.FileHandler',
            'filename': BASE_DIR / 'logs' / 'cubicspin.log',
            'formatter': 'verbose',
        },
        'console': {
            'level': LOG_LEVEL,
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console', 'file'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console', 'file'],
            'level': 'WARNING',
            'propagate': False,
        },
        'cubicspin': {
            'handlers': ['console', 'file'],
            'level': 'DEBUG',
            'propagate': False,
        },
    },
}

# Create logs directory
(BASE_DIR / 'logs').mkdir(exist_ok=True)
