"""
Django settings for the umbral_rz project.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Only used by Django internals; nothing here is served.
SECRET_KEY = os.getenv('SECRET_KEY', 'django-insecure-dev-key-change-in-production')

DEBUG = False

ALLOWED_HOSTS = []

# Application definition
INSTALLED_APPS = [
    'bellumbra',
]

# Database (suite run history only)
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.getenv('UMBRAL_RZ_DB', BASE_DIR / 'db.sqlite3'),
    }
}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

# Default primary key field type
DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'bellumbra': {
            'handlers': ['console'],
            'level': os.getenv('UMBRAL_RZ_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}

# Computation settings
# Deletion-contraction is exponential in the edge count; graphs above this
# vertex count are refused unless the bound is raised.
UMBRAL_RZ_MAX_VERTICES = int(os.getenv('UMBRAL_RZ_MAX_VERTICES', '14'))

# Terms of the truncated Dobinski sum used as a numeric oracle
UMBRAL_RZ_DOBINSKI_TERMS = int(os.getenv('UMBRAL_RZ_DOBINSKI_TERMS', '300'))

# Seed for randomized verification instances
UMBRAL_RZ_SEED = int(os.getenv('UMBRAL_RZ_SEED', '0'))
