"""
Camada de infraestrutura.

Contém implementações concretas de entrada e saída:
- Formato textual de diagramas de Moore
- Codec de palavras
- Persistência de relatórios (TSV)
"""

from src.infrastructure.moore import MooreDocument, parse, serialize
from src.infrastructure.persistence import TsvReportWriter, render_certificate
from src.infrastructure.words import format_group_word, parse_group_word

__all__ = [
    "MooreDocument",
    "parse",
    "serialize",
    "TsvReportWriter",
    "render_certificate",
    "format_group_word",
    "parse_group_word",
]
