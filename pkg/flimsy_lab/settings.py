"""
Django settings for flimsy_lab project.

For more information on this file, see
https://docs.djangoproject.com/en/5.2/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get('SESSION_SECRET', 'django-insecure-flimsy-lab-local-only-key')

DEBUG = os.environ.get('FLIMSY_DEBUG', '0') == '1'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'rest_framework',
    'orders',
    'connectivity',
    'continua',
    'search',
    'propsuite',
    'cli',
]


# Database
# The search ledger is the only persistent state.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Default primary key field type
# https://docs.djangoproject.com/en/5.2/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# REST Framework Settings
# Serializers, parsers and renderers are used for the JSON file formats only.
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'DEFAULT_PARSER_CLASSES': [
        'rest_framework.parsers.JSONParser',
    ],
    'UNAUTHENTICATED_USER': None,
}

# Fixtures for the named structures (square, hexagon, discrete circles, l1/l2)
FIXTURES_DIR = BASE_DIR / 'fixtures'

# Property suite
# A fixed default seed keeps `suite` output reproducible without --seed.
FLIMSY_SEED = int(os.environ.get('FLIMSY_SEED', '20251018'))
FLIMSY_JOBS = int(os.environ.get('FLIMSY_JOBS', '1'))

SUITE_CASES_PER_PROPERTY = 1000
SUITE_MAX_DENOMINATOR = 64
SUITE_MAX_SUPPORT = 8
SUITE_MAX_RETRIES = 100

# Search engine
SEARCH_RAW_LIMIT = 4  # 2^(2^4) candidate families
SEARCH_GUARANTEED_LIMIT = 5
SEARCH_MAX_GROUND_SIZE = 6
SEARCH_CHECKPOINT_DIR = Path(os.environ.get('SEARCH_CHECKPOINT_DIR', BASE_DIR / 'checkpoints'))

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '[{levelname}] {asctime} {module} {message}',
            'style': '{',
        },
        'simple': {
            'format': '[{levelname}] {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
        'console_verbose': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'search': {
            'handlers': ['console_verbose'],
            'level': 'DEBUG' if DEBUG else 'INFO',
            'propagate': False,
        },
        'propsuite': {
            'handlers': ['console_verbose'],
            'level': 'DEBUG' if DEBUG else 'INFO',
            'propagate': False,
        },
        'cli': {
            'handlers': ['console'],
            'level': 'DEBUG' if DEBUG else 'WARNING',
            'propagate': False,
        },
        'orders': {
            'handlers': ['console'],
            'level': 'DEBUG' if DEBUG else 'WARNING',
            'propagate': False,
        },
        'connectivity': {
            'handlers': ['console'],
            'level': 'DEBUG' if DEBUG else 'WARNING',
            'propagate': False,
        },
        'continua': {
            'handlers': ['console'],
            'level': 'DEBUG' if DEBUG else 'WARNING',
            'propagate': False,
        },
    },
}
