"""Configuration management using Pydantic Settings."""

from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings loaded from ``ENTGRAPH_*`` environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="ENTGRAPH_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Logging
    log_level: str = "INFO"

    # Classification tolerances
    tol_ent: float = 1e-9
    tol_fac: float = 1e-9
    tol_psd: float = 1e-10
    tol_tr: float = 1e-10
    tol_herm: float = 1e-10
    tol_norm: float = 1e-10
    marginal_factor: float = 100.0

    # Size caps
    enumeration_cap: int = 6
    canonical_cap: int = 8
    dense_cap: int = 14
    census_cap: int = 5
    search_cap: int = 6

    # Entangled-web synthesis
    web_grid: int = 21

    # Pure-state search
    search_restarts: int = 64
    search_max_evals: int = 20000
    search_seed: int = 0
    concurrence_floor: float = 0.01
    correlation_floor: float = 0.01
    objective_tol: float = 1e-12
    search_tol_ent: float = 1e-10
    search_tol_fac: float = 1e-10
    polish_rounds: int = 3
    search_retry_factor: int = 1

    # Orchestration
    jobs: int = 1
    archive_dir: str = "./witness_archive"


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get toolkit settings (cached)."""
    return Settings()
