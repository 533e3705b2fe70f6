"""Application Configuration Module.

Implements 12-factor configuration using pydantic-settings.
All configuration is loaded from environment variables with sensible defaults.

Environment file loading priority:
1. If APP_ENV is set, loads .env.{APP_ENV} (e.g., .env.dev, .env.prod)
2. Falls back to .env if specific file doesn't exist
3. Environment variables always override file values
"""
import os
from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Repository root (src/xxzring/core/config.py -> ../../..)
_PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent.parent


def _get_env_file() -> str | tuple[str, ...]:
    """
    Determine which .env file(s) to load based on APP_ENV.

    Priority (later files override earlier):
    1. .env (base defaults)
    2. .env.{APP_ENV} (environment-specific overrides)
    """
    app_env = os.getenv("APP_ENV", "").lower()

    env_to_file = {
        "dev": "dev",
        "development": "dev",
        "prod": "prod",
        "production": "prod",
        "staging": "staging",
        "test": "test",
    }

    file_suffix = env_to_file.get(app_env, app_env)

    env_files: list[str] = []

    if Path(".env").exists():
        env_files.append(".env")

    if file_suffix:
        env_specific = f".env.{file_suffix}"
        if Path(env_specific).exists():
            env_files.append(env_specific)

    if env_files:
        return tuple(env_files)
    return ".env"


class Settings(BaseSettings):
    """
    Simulator settings loaded from environment variables.

    Numerical tolerances live here so that tests and the CLI agree on them.
    Every value can be overridden through the environment.
    """

    model_config = SettingsConfigDict(
        env_file=_get_env_file(),
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # ========================================
    # Application Settings
    # ========================================
    APP_NAME: str = Field(
        default="xxzring",
        description="Application name used in logging and result metadata"
    )
    APP_VERSION: str = Field(
        default="1.0.0",
        description="Code version stamped into every SweepResult"
    )
    APP_ENV: Literal["development", "staging", "production"] = Field(
        default="development",
        description="Deployment environment (selects the log renderer)"
    )
    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        default="WARNING",
        description="Logging level"
    )

    # ========================================
    # Ring Limits
    # ========================================
    MAX_SITES: int = Field(
        default=14,
        ge=3,
        le=16,
        description="Largest ring size; dense 2^N x 2^N matrices must fit in memory"
    )
    ALLOW_NEGATIVE_SCALES: bool = Field(
        default=False,
        description="Accept negative alpha/beta (ferromagnetic impurity bonds)"
    )

    # ========================================
    # Numerical Tolerances
    # ========================================
    DEGENERACY_TOL: float = Field(
        default=1e-9,
        gt=0.0,
        description="Energy window above E_0 treated as ground-state manifold"
    )
    CONCURRENCE_EPSILON: float = Field(
        default=1e-6,
        gt=0.0,
        description="Concurrence at or below this value counts as vanished (critical temperature)"
    )
    NEGATIVE_EIGENVALUE_TOL: float = Field(
        default=1e-10,
        gt=0.0,
        description="Eigenvalues of R above -tol are clamped to zero; below it the state is invalid"
    )
    EIGEN_RESIDUAL_TOL: float = Field(
        default=1e-9,
        gt=0.0,
        description="Allowed ||Hv - Ev||_inf relative to max(1, ||H||_inf)"
    )
    ORTHONORMALITY_TOL: float = Field(
        default=1e-10,
        gt=0.0,
        description="Allowed deviation of the eigenvector Gram matrix from identity"
    )
    USE_SZ_BLOCKS: bool = Field(
        default=True,
        description="Diagonalize magnetization sectors separately instead of the dense matrix"
    )

    # ========================================
    # Sweeps & Output
    # ========================================
    SWEEP_MAX_WORKERS: int = Field(
        default=0,
        ge=0,
        description="Worker threads for sweeps (0 = one per CPU)"
    )
    CSV_SIGNIFICANT_DIGITS: int = Field(
        default=12,
        ge=6,
        le=17,
        description="Significant digits for concurrence values in CSV output"
    )
    PRESETS_PATH: str = Field(
        default=str(_PROJECT_ROOT / "config" / "presets.yaml"),
        description="Path to the YAML preset catalogue"
    )

    # Computed Properties
    # ========================================
    @property
    def is_development(self) -> bool:
        """Check if running in development environment."""
        return self.APP_ENV == "development"

    @property
    def sweep_workers(self) -> int:
        """Resolve SWEEP_MAX_WORKERS=0 to the CPU count."""
        return self.SWEEP_MAX_WORKERS or (os.cpu_count() or 1)

    # ========================================
    # Validators
    # ========================================
    @model_validator(mode="after")
    def validate_tolerances(self) -> "Settings":
        """The clamp threshold must be tighter than the vanishing threshold."""
        if self.NEGATIVE_EIGENVALUE_TOL >= self.CONCURRENCE_EPSILON:
            raise ValueError(
                "NEGATIVE_EIGENVALUE_TOL must be smaller than CONCURRENCE_EPSILON"
            )
        return self


@lru_cache
def get_settings() -> Settings:
    """Return the cached settings instance.

    Tests override values through environment variables followed by
    ``get_settings.cache_clear()``.
    """
    return Settings()
