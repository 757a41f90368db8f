"""
Django settings for the BettiLab project.

Computation budgets, the default coefficient field and worker counts are read
from the environment so sweeps can be tuned without code changes.
"""
from pathlib import Path
import os

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# ==============================================================================
# SECURITY WARNING: keep the secret key used in production secret!
# ==============================================================================
SECRET_KEY = os.environ.get(
    'DJANGO_SECRET_KEY',
    'django-insecure-betti-lab-local-development-key',
)

DEBUG = os.environ.get('DJANGO_DEBUG', '1') == '1'

ALLOWED_HOSTS = os.environ.get('DJANGO_ALLOWED_HOSTS', 'localhost,127.0.0.1,testserver').split(',')

# ==============================================================================
# Application definition
# ==============================================================================
INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',
    'algebra',
    'reports',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'BettiLab.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.debug',
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]

WSGI_APPLICATION = 'BettiLab.wsgi.application'

# ==============================================================================
# Database (verification runs are persisted here)
# ==============================================================================
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}

# ==============================================================================
# Internationalization
# ==============================================================================
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = True
USE_TZ = True

STATIC_URL = '/static/'
STATIC_ROOT = os.path.join(BASE_DIR, 'staticfiles')

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# ==============================================================================
# Logging
# ==============================================================================
BETTI_LOG_LEVEL = os.environ.get('BETTI_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'algebra': {
            'handlers': ['console'],
            'level': BETTI_LOG_LEVEL,
            'propagate': False,
        },
        'reports': {
            'handlers': ['console'],
            'level': BETTI_LOG_LEVEL,
            'propagate': False,
        },
    },
}

# ==============================================================================
# Computation budgets and defaults
# ==============================================================================
BETTI_BUDGET = int(os.environ.get('BETTI_BUDGET', str(2 ** 22)))
BETTI_FACET_SUBSET_BUDGET = int(os.environ.get('BETTI_FACET_SUBSET_BUDGET', str(BETTI_BUDGET)))
BETTI_VERTEX_SUBSET_BUDGET = int(os.environ.get('BETTI_VERTEX_SUBSET_BUDGET', str(BETTI_BUDGET)))

# 0 = rationals, a prime p = GF(p)
BETTI_DEFAULT_FIELD = int(os.environ.get('BETTI_DEFAULT_FIELD', '2'))

BETTI_WORKERS = int(os.environ.get('BETTI_WORKERS', '1'))
