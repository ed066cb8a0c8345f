"""
Configuration for the hmsector command line
"""
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()

CONFIG_PATH = Path(__file__).parent.parent / "config" / "settings.yaml"
ENV_PREFIX = "HMSECTOR_"


def load_yaml_defaults(path: Path = CONFIG_PATH) -> Dict[str, Any]:
    """
    Read the default settings file.

    Args:
        path: YAML file with lower-case keys matching the Settings fields

    Returns:
        Dict of defaults, empty when the file is missing
    """
    if not path.exists():
        return {}
    with open(path, "r") as f:
        return yaml.safe_load(f) or {}


_DEFAULTS = load_yaml_defaults()


class Settings(BaseSettings):
    """Settings loaded from config/settings.yaml, then HMSECTOR_* environment variables"""

    # Application
    APP_NAME: str = "hmsector"
    APP_VERSION: str = "1.0.0"
    LOG_LEVEL: str = _DEFAULTS.get("log_level", "WARNING")
    LOG_FILE: Optional[str] = _DEFAULTS.get("log_file")

    # Oracle determinism
    SEED: int = int(_DEFAULTS.get("seed", 1729))

    # Exact search limits
    MINOR_ORDER_CAP: int = int(_DEFAULTS.get("minor_order_cap", 4))
    VERIFICATION_WINDOW_EXTRA: int = int(_DEFAULTS.get("verification_window_extra", 2))

    # Floating-point oracle tolerances
    ROOT_TOL: float = float(_DEFAULTS.get("root_tol", 1e-13))
    RESIDUAL_TOL: float = float(_DEFAULTS.get("residual_tol", 1e-8))
    SECTOR_SLACK: float = float(_DEFAULTS.get("sector_slack", 1e-6))
    CLUSTER_SLACK: float = float(_DEFAULTS.get("cluster_slack", 1e-2))
    CLUSTER_DISTANCE: float = float(_DEFAULTS.get("cluster_distance", 1e-4))
    MAX_ITERATIONS: int = int(_DEFAULTS.get("max_iterations", 500))
    ROOT_ATTEMPTS: int = int(_DEFAULTS.get("root_attempts", 3))

    model_config = SettingsConfigDict(
        env_prefix=ENV_PREFIX,
        env_file=".env",
        case_sensitive=True,
        extra="ignore",  # Ignore unrelated keys from .env
    )


def get_settings() -> Settings:
    """Build settings from the current environment (re-read on every call)"""
    return Settings()


def resolve_seed(cli_seed: Optional[int], current: Settings) -> int:
    """
    Pick the oracle seed. HMSECTOR_SEED in the environment wins over --seed.

    Args:
        cli_seed: Value of the --seed flag, if given
        current: Resolved settings

    Returns:
        Seed to hand to the root oracle
    """
    if f"{ENV_PREFIX}SEED" in os.environ:
        return current.SEED
    if cli_seed is not None:
        return cli_seed
    return current.SEED
