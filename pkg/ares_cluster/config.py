from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Process-wide settings, read from ARES_* environment variables or .env."""

    data_dir: Path = Path("data")
    log_level: str = "WARNING"

    max_workers: int = Field(default=1, ge=1)
    distance_block_size: int = Field(default=512, ge=1)

    fetch_timeout: float = 30.0
    fetch_retries: int = 2

    model_config = {
        "env_prefix": "ARES_",
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "extra": "ignore",
    }


settings = Settings()
