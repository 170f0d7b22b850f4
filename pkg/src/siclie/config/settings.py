"""Runtime settings read from the environment."""

import logging
import os
from functools import lru_cache
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

BUNDLED_DATA_DIR = Path(__file__).resolve().parent.parent / "data"

_ENV_FIELDS = {
    "SIC_DATA_DIR": "data_dir",
    "SIC_TOL": "tol",
    "SIC_FILE_TOL": "file_tol",
    "SIC_WORKERS": "workers",
    "SIC_LOG_LEVEL": "log_level",
}


class Settings(BaseModel):
    """Tolerances, data location and parallelism for a run."""

    data_dir: Path = Field(
        default=BUNDLED_DATA_DIR, description="Directory holding d<N>.txt fiducials"
    )
    tol: float = Field(
        default=1e-9, gt=0, description="Tolerance for optimizer-produced sets"
    )
    file_tol: float = Field(
        default=1e-10, gt=0, description="Tolerance for file-ingested fiducials"
    )
    workers: Optional[int] = Field(
        default=None, ge=1, description="Thread pool size; None uses the default"
    )
    log_level: str = Field(default="INFO", description="Logging level name")

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if not isinstance(logging.getLevelName(value), int):
            raise ValueError(f"Unknown log level: {value}")
        return value

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from SIC_* variables, loading a .env file first."""
        load_dotenv()
        values = {}
        for env_name, field in _ENV_FIELDS.items():
            raw = os.getenv(env_name)
            if raw:
                values[field] = raw
        return cls(**values)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings.from_env()
