"""
Interfaces (contratos) do domínio.

Os motores de órbita e a varredura dependem destas abstrações, não das
implementações concretas (autômatos iniciais, levantamentos π_τ, arquivos).
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Protocol, runtime_checkable

from src.domain.entities import SweepReport


@runtime_checkable
class WordTransformation(Protocol):
    """
    Transformação de palavras que preserva comprimento.

    Implementada por `InitialRef` (A_q) e pelos levantamentos π_τ.
    """

    @property
    def label(self) -> str:
        """Nome curto usado em rótulos de órbitas e caminhos."""
        ...

    def __call__(self, word: tuple[int, ...]) -> tuple[int, ...]:
        ...


class IReportWriter(ABC):
    """
    Interface para persistência de relatórios de varredura.

    Permite diferentes implementações (TSV em disco, memória nos testes).
    """

    @abstractmethod
    def write(self, report: SweepReport, destination: Path) -> Path:
        """
        Persiste o relatório.

        Args:
            report: Relatório da varredura.
            destination: Caminho de saída.

        Returns:
            Caminho efetivamente escrito.
        """
        ...

    @abstractmethod
    def render(self, report: SweepReport) -> str:
        """Texto completo do relatório."""
        ...
