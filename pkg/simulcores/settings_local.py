# LOCAL DEVELOPMENT / TEST SETTINGS (more verbose than the defaults)
from .settings import *  # noqa: F401,F403
from decouple import config

SECRET_KEY = config("SECRET_KEY", default="django-insecure-local-development-key")

DEBUG = config("DEBUG", default=True, cast=bool)

CORES_LOG_LEVEL = config("CORES_LOG_LEVEL", default="DEBUG")

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
