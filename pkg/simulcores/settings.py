from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# The project has no web surface; SECRET_KEY is only read if something asks for it.
SECRET_KEY = config("SECRET_KEY", default="")

DEBUG = config("DEBUG", default=False, cast=bool)


# Application definition

INSTALLED_APPS = [
    "cores",
]

# No models, so no database.
DATABASES = {}

# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# CORES

# Defaults for `manage.py cores selftest`
CORES_SELFTEST_T_MAX = config("CORES_SELFTEST_T_MAX", default=10, cast=int)
CORES_SELFTEST_P_MAX = config("CORES_SELFTEST_P_MAX", default=3, cast=int)
CORES_SELFTEST_WORKERS = config("CORES_SELFTEST_WORKERS", default=1, cast=int)

# Enumeration warns when the beta-set bound B exceeds this value
CORES_ENUMERATION_WARN_BOUND = config("CORES_ENUMERATION_WARN_BOUND", default=1000, cast=int)

CORES_LOG_LEVEL = config("CORES_LOG_LEVEL", default="INFO")


# https://docs.djangoproject.com/en/dev/ref/settings/#logging
# See https://docs.djangoproject.com/en/dev/topics/logging for
# more details on how to customize your logging configuration.
# The console handler writes to stderr; stdout carries command data only.
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "%(levelname)s %(asctime)s %(module)s %(process)d %(thread)d %(message)s",
        },
    },
    "handlers": {
        "console": {
            "level": "DEBUG",
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "root": {"level": CORES_LOG_LEVEL, "handlers": ["console"]},
    "loggers": {
        "cores": {
            "handlers": ["console"],
            "level": CORES_LOG_LEVEL,
            "propagate": False,
        },
    },
}
