import logging
import os
from typing import Optional

import logzero

DEFAULT_BRUTE_FORCE_THRESHOLD = 9
DEFAULT_LOG_LEVEL = "WARNING"


def get_brute_force_threshold(threshold: Optional[int] = None) -> int:
    """Largest vertex count the brute-force oracles will accept.

    An explicit value wins; otherwise D2C_BRUTE_THRESHOLD is consulted, then the default of 9.
    """
    if threshold is not None:
        value = threshold
    elif env_value := os.getenv("D2C_BRUTE_THRESHOLD"):
        try:
            value = int(env_value)
        except ValueError:
            raise ValueError(f"D2C_BRUTE_THRESHOLD must be an integer, got {env_value!r}") from None
    else:
        value = DEFAULT_BRUTE_FORCE_THRESHOLD
    if value < 0:
        raise ValueError(f"Brute-force threshold must be non-negative, got {value}")
    return value


def configure_logging(level: Optional[str] = None) -> int:
    level_name = (level or os.getenv("D2C_LOG_LEVEL") or DEFAULT_LOG_LEVEL).upper()
    numeric = logging.getLevelName(level_name)
    if not isinstance(numeric, int):
        raise ValueError(f"Unknown log level {level_name!r}")
    logzero.loglevel(numeric)
    return numeric
