"""
Schemas Pydantic para validação das opções dos comandos.
"""

from enum import Enum
from pathlib import Path

from pydantic import BaseModel, Field, field_validator

from src.services.lemma_suite import LEMMAS


class DeriveOpEnum(str, Enum):
    """Autômatos derivados disponíveis."""

    INVERSE = "inverse"
    REVERSE = "reverse"
    DUAL = "dual"


class DeriveRequest(BaseModel):
    op: DeriveOpEnum
    file: str
    output: Path | None = None


class OrbitRequest(BaseModel):
    automaton: str
    states: str = Field(min_length=1)
    word: str
    group: bool = False


class VerifyFreenessRequest(BaseModel):
    """Varredura limitada; max_len = 0 produz relatório vazio."""

    max_len: int = Field(ge=0, le=12)
    jobs: int | None = Field(default=None, ge=1)
    report: Path | None = None
    progress: bool | None = None


class VerifyLemmasRequest(BaseModel):
    max_len: int = Field(ge=0, le=8)
    lemmas: list[str] = Field(default_factory=list)

    @field_validator("lemmas")
    @classmethod
    def validate_lemmas(cls, v: list[str]) -> list[str]:
        unknown = [name for name in v if name not in LEMMAS]
        if unknown:
            raise ValueError(
                f"lemas desconhecidos: {', '.join(unknown)} (disponíveis: {', '.join(LEMMAS)})"
            )
        return v


# Nome do campo → flag na linha de comando, para diagnósticos
FIELD_FLAGS: dict[str, str] = {
    "max_len": "--max-len",
    "jobs": "--jobs",
    "report": "--report",
    "lemmas": "--lemma",
    "states": "--states",
    "word": "--word",
    "automaton": "--automaton",
    "op": "--op",
    "output": "-o",
}
