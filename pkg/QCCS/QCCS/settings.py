"""
Django settings for the QCCS project.

The project hosts a single app, ``cat_correlations``, whose management
commands (report, sweep, threshold, verify) are the whole user surface.
There are no models, views or URLs, so no database is configured.
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# Only needed because Django insists on a non-empty key; nothing is signed.
SECRET_KEY = os.environ.get(
    'QCCS_SECRET_KEY',
    'django-insecure-qccs-8w1m!t2r2p0q#cat-correlations-local-only',
)

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'cat_correlations',
]

MIDDLEWARE = []


# No persistence: every result goes to stdout or to a file named on the
# command line.
DATABASES = {}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Logging
# Payloads go to stdout; diagnostics go to stderr through this config.

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'cat_correlations': {
            'handlers': ['console'],
            'level': os.environ.get('QCCS_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}


# Numerical defaults for the correlation toolkit.
# Every key can be overridden per run with --config or the matching flag.

CAT_CORRELATIONS = {
    # conditional-entropy minimiser: (n_theta, n_phi) grid, simplex tolerance
    'DISCORD_GRID': (64, 128),
    'DISCORD_TOLERANCE': 1e-9,
    'DISCORD_RESTARTS': 3,
    'DISCORD_SEED': 20141107,
    # unit-sphere scan for the largest K eigenvalue
    'SPHERE_GRID': (181, 360),
    'SIGNIFICANT_DIGITS': 15,
    'THRESHOLD_TOLERANCE': 1e-10,
    'THRESHOLD_BRACKET': (0.01, 0.99),
    'JOBS': 1,
    'VERIFY_TOLERANCES': {
        'concurrence_oracle': 1e-10,
        'koashi_winter': 1e-10,
        'marginal_spectra': 1e-10,
        'joint_spectrum': 1e-10,
        'additivity': 1e-9,
        'discord_oracle': 1e-5,
        'bloch_closed_form': 1e-12,
        'geometric_generic': 1e-10,
        'geometric_compact_form': 1e-12,
        'geometric_a_be_exact': 1e-10,
        'kmax_sphere': 1e-8,
        'tangle_consistency': 1e-12,
    },
}
