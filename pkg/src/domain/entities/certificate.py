"""
Entidades de resultado do verificador de liberdade.
"""

from dataclasses import dataclass, field
from enum import Enum

from src.domain.entities.automaton import TreeWord
from src.domain.entities.words import GroupWordQ


class Verdict(str, Enum):
    """Veredito sobre a transformação B_ξ."""

    IDENTITY = "identity"
    NONTRIVIAL = "nontrivial"


@dataclass(frozen=True, slots=True)
class TrivialityCertificate:
    """
    Certificado da decisão "B_ξ = 1?".

    Se não trivial, `witness_vertex` é um vértice w com a seção D_w(ξ)
    agindo não trivialmente no primeiro nível, e `min_level` = |w| + 1
    é o menor nível onde B_ξ move algum vértice.
    """

    word: GroupWordQ
    verdict: Verdict
    orbit_explored: int
    witness_vertex: TreeWord | None = None
    min_level: int | None = None

    @property
    def is_identity(self) -> bool:
        return self.verdict is Verdict.IDENTITY


@dataclass(frozen=True, slots=True)
class SweepRow:
    """Linha do relatório: uma palavra verificada."""

    word: GroupWordQ
    length: int
    min_level: int | None
    orbit_explored: int


@dataclass
class SweepReport:
    """Relatório da varredura limitada de liberdade."""

    max_length: int
    rows: list[SweepRow] = field(default_factory=list)
    timing: float = 0.0

    @property
    def words_checked(self) -> int:
        return len(self.rows)

    @property
    def all_nontrivial(self) -> bool:
        return all(row.min_level is not None for row in self.rows)

    @property
    def identity_words(self) -> list[GroupWordQ]:
        return [row.word for row in self.rows if row.min_level is None]


@dataclass(frozen=True)
class LemmaResult:
    """Resultado de uma verificação executável de lema."""

    name: str
    passed: bool
    checked: int
    detail: str = ""
