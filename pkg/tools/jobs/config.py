"""
Job Configuration Module

Environment-backed defaults for the command line and the JSON service.
Values come from the process environment, optionally seeded from a .env
file; command-line flags and request fields override them.
"""

import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

from tools.utils.error_utils import UsageError

load_dotenv()

logger = logging.getLogger(__name__)


def _int_setting(name, default):
    raw = os.getenv(name)
    if raw in (None, ''):
        return default
    try:
        return int(raw)
    except ValueError as ex:
        raise UsageError(f"{name} must be an integer, got {raw!r}", hint=f"fix {name} in the environment or .env") from ex


@dataclass(frozen=True)
class Settings:
    field: str = "2,1,1"
    seed: int = 0
    log_level: str = "INFO"
    output_dir: str = "outputs"
    random_samples: int = 50


def get_settings():
    """
    Read WOUND_* variables.

    Returns:
        Settings: Current defaults

    Raises:
        UsageError: When a numeric variable does not parse
    """
    settings = Settings(
        field=os.getenv("WOUND_FIELD") or Settings.field,
        seed=_int_setting("WOUND_SEED", Settings.seed),
        log_level=(os.getenv("WOUND_LOG_LEVEL") or Settings.log_level).upper(),
        output_dir=os.getenv("WOUND_OUTPUT_DIR") or Settings.output_dir,
        random_samples=_int_setting("WOUND_RANDOM_SAMPLES", Settings.random_samples),
    )
    logger.debug(f"Settings: {settings}")
    return settings


def configure_logging(level=None):
    """basicConfig once, at the level from the argument or WOUND_LOG_LEVEL."""
    level = (level or os.getenv("WOUND_LOG_LEVEL") or "INFO").upper()
    logging.basicConfig(level=getattr(logging, level, logging.INFO),
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
