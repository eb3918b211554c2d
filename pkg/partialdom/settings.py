"""
Django settings for partialdom project.

For more information on this file, see
https://docs.djangoproject.com/en/5.2/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path

from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='partialdom-local-only', cast=str)

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'conjecture',
    'domination',
    'formulas',
    'graphs',
    'locating',
]

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'autoescape': False,
        },
    },
]

# Cache
# https://docs.djangoproject.com/en/5.2/ref/settings/#caches

CACHES = {
    'default': {
        'BACKEND': config('CACHE_BACKEND', default='django.core.cache.backends.locmem.LocMemCache', cast=str),
        'LOCATION': config('CACHE_LOCATION', default='partialdom', cast=str),
        'TIMEOUT': None,
    }
}

# Logging
# https://docs.djangoproject.com/en/5.2/topics/logging/

LOG_LEVEL = config('LOG_LEVEL', default='WARNING', cast=str)

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'keyValue': {
            'format': 'time={asctime} level={levelname} logger={name} message={message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'keyValue',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': LOG_LEVEL,
    },
}

# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

TEST_RUNNER = 'partialdom.tests.runner.TestFileDiscoverRunner'

# Toolkit settings
VERTEX_CAP = config('VERTEX_CAP', default=64, cast=int)
ENUMERATION_MAX_ORDER = config('ENUMERATION_MAX_ORDER', default=7, cast=int)
SCAN_WORKERS = config('SCAN_WORKERS', default=1, cast=int)
