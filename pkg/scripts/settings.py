"""Environment-driven configuration for the workbench."""

import logging
import os
from typing import Optional

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

# Hard ceiling of the exhaustive enumerator; the env var may only lower it.
ENUMERATION_HARD_CAP = 12


def _int_env(name: str, default: int, minimum: int = 0, maximum: Optional[int] = None) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring {name}={raw!r}: not an integer, using {default}")
        return default
    if value < minimum or (maximum is not None and value > maximum):
        logger.warning(f"Ignoring {name}={value}: outside [{minimum}, {maximum}], using {default}")
        return default
    return value


CACHE_PATH: Optional[str] = os.getenv("TURAN_CACHE_PATH") or None
DEFAULT_JOBS = _int_env("TURAN_JOBS", 1, minimum=1)
LOG_LEVEL = os.getenv("TURAN_LOG_LEVEL", "WARNING").upper()
TABLE_EXACT_MAX_N = _int_env("TURAN_TABLE_EXACT_MAX_N", 9, minimum=0, maximum=ENUMERATION_HARD_CAP)
ENUMERATION_CAP = _int_env(
    "TURAN_ENUMERATION_CAP", ENUMERATION_HARD_CAP, minimum=0, maximum=ENUMERATION_HARD_CAP
)

WANDB_PROJECT = os.getenv("WANDB_PROJECT", "turan-workbench")
WANDB_ENTITY: Optional[str] = os.getenv("WANDB_ENTITY") or None
