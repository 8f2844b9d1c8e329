import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

from utils.errors import ConfigurationError

# Load settings from a .env file if one is present
load_dotenv()

EIGEN_METHODS = ("float", "exact")


def _read_int(name, default, minimum=0):
    """Reads an integer environment variable, rejecting values below `minimum`."""
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got '{raw}'.") from None
    if value < minimum:
        raise ConfigurationError(f"{name} must be at least {minimum}, got {value}.")
    return value


@dataclass(frozen=True)
class Settings:
    """Runtime knobs read from the environment."""

    workers: int = 1
    search_budget: int = 20000
    oracle_max_n: int = 6
    mis_max_n: int = 5
    eigen_method: str = "float"
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls):
        """Builds settings from CERT_* environment variables."""
        eigen_method = os.getenv("CERT_EIGEN_METHOD", "float").strip().lower()
        if eigen_method not in EIGEN_METHODS:
            raise ConfigurationError(
                f"CERT_EIGEN_METHOD must be one of {', '.join(EIGEN_METHODS)}, got '{eigen_method}'."
            )

        log_level = os.getenv("CERT_LOG_LEVEL", "WARNING").strip().upper()
        if not isinstance(logging.getLevelName(log_level), int):
            raise ConfigurationError(f"CERT_LOG_LEVEL is not a logging level: '{log_level}'.")

        return cls(
            workers=_read_int("CERT_WORKERS", 1, minimum=1),
            search_budget=_read_int("CERT_SEARCH_BUDGET", 20000, minimum=1),
            oracle_max_n=_read_int("CERT_ORACLE_MAX_N", 6, minimum=1),
            mis_max_n=_read_int("CERT_MIS_MAX_N", 5, minimum=1),
            eigen_method=eigen_method,
            log_level=log_level,
        )


def get_settings():
    """Returns the settings for the current environment."""
    return Settings.from_env()
