"""
Aleshin Automata
Configurações por ambiente
"""

import os
from functools import lru_cache
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Limite rígido do formato Moore
MOORE_HARD_LIMIT = 64


class Settings(BaseSettings):
    """Configurações da aplicação com validação via Pydantic."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "aleshin-automata"
    app_version: str = "1.0.0"
    debug: bool = False

    # Logging
    log_level: str = "WARNING"
    log_format: Literal["json", "console"] = "console"

    # Varredura de liberdade
    sweep_jobs: int | None = Field(default=None, ge=1)
    sweep_shard_prefix_len: int = Field(default=2, ge=1, le=4)
    sweep_cache_enabled: bool = True
    sweep_progress: bool = True

    # Formato Moore
    moore_max_states: int = MOORE_HARD_LIMIT
    moore_max_letters: int = MOORE_HARD_LIMIT

    # Suíte de lemas
    lemma_max_len: int = Field(default=6, ge=0, le=8)

    @field_validator("moore_max_states", "moore_max_letters")
    @classmethod
    def validate_moore_limits(cls, v: int, info) -> int:
        """Limites do formato devem ficar entre 1 e 64."""
        if not 1 <= v <= MOORE_HARD_LIMIT:
            raise ValueError(
                f"{info.field_name} deve estar entre 1 e {MOORE_HARD_LIMIT} (recebido {v})"
            )
        return v

    @property
    def effective_jobs(self) -> int:
        """Número de workers da varredura (padrão: paralelismo disponível)."""
        return self.sweep_jobs or os.cpu_count() or 1

    @property
    def effective_log_level(self) -> str:
        return "DEBUG" if self.debug else self.log_level.upper()


@lru_cache
def get_settings() -> Settings:
    """Retorna instância cacheada das configurações."""
    return Settings()
