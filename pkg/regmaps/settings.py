"""Configuration management for regmaps."""

from pathlib import Path
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import PositiveInt
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables
load_dotenv()


class Settings(BaseSettings):
    """Application settings."""

    # Logging
    log_level: str = "info"
    log_file: Optional[Path] = None

    # Coset enumeration
    max_cosets: PositiveInt = 2 ** 22
    strategy: Literal["felsch", "hlt"] = "hlt"

    # Census
    census_max_exp: PositiveInt = 9
    census_dir: Path = Path("census")
    census_max_nodes: PositiveInt = 1_000_000
    workers: PositiveInt = 1
    resume: bool = False

    # Verification
    report_path: Path = Path("reports") / "verification.jsonl"
    counts_file: Optional[Path] = None

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="REGMAPS_",
        extra="ignore",
    )


settings = Settings()
