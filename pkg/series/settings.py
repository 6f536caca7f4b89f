from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="RIORDAN_")

    # Truncation order / prefix budget used when a caller gives none
    default_order: int = Field(16, ge=1)
    # Exhaustive path enumeration is refused beyond this n or m
    oracle_max: int = Field(8, ge=0)
    # Build every matrix twice (recurrence and direct extraction) and compare
    crosscheck: bool = False
    log_level: str = "WARNING"


@lru_cache
def get_settings() -> Settings:
    return Settings()
