import logging
import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

# Largest arity with a materialised truth table (2^24 entries)
MAX_ARITY = 24

# Hard cap on candidate evaluations for the minimal anchor search
DEFAULT_BUDGET = 10**9


class Settings(BaseModel):
    """Process-wide defaults, overridable from the environment and the CLI"""
    jobs: int = Field(default=1, ge=1)
    seed: int = 0
    budget: int = Field(default=DEFAULT_BUDGET, ge=1)
    max_arity: int = Field(default=MAX_ARITY, ge=0, le=MAX_ARITY)
    log_level: str = "WARNING"
    checkpoint_dir: Optional[str] = None

    model_config = ConfigDict(frozen=True)

    @classmethod
    def from_env(cls, dotenv: bool = True) -> "Settings":
        """Build settings from NNREPR_* variables, loading .env first"""
        if dotenv:
            load_dotenv()
        values = {}
        for field, var in (
            ("jobs", "NNREPR_JOBS"),
            ("seed", "NNREPR_SEED"),
            ("budget", "NNREPR_BUDGET"),
            ("log_level", "NNREPR_LOG_LEVEL"),
            ("checkpoint_dir", "NNREPR_CHECKPOINT_DIR"),
        ):
            raw = os.getenv(var)
            if raw is not None and raw != "":
                values[field] = raw
        return cls(**values)


def configure_logging(level: str) -> None:
    """Route package logs to stderr at the given level"""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s"
    )


__all__ = ['Settings', 'configure_logging', 'MAX_ARITY', 'DEFAULT_BUDGET']
