"""
Relatórios de varredura em TSV e texto dos certificados.
"""

from pathlib import Path

from src.core.logging import get_logger
from src.domain.entities import SweepReport, TrivialityCertificate
from src.domain.interfaces import IReportWriter
from src.infrastructure.words import format_group_word, format_letters

logger = get_logger(__name__)

TSV_HEADER = "word\tlength\tmin_level\torbit_explored"
IDENTITY_LEVEL = "identity"


def render_summary(report: SweepReport) -> str:
    """Resumo de uma linha, ex.: `23436 words, all nontrivial`."""
    if report.all_nontrivial:
        return f"{report.words_checked} words, all nontrivial"
    return (
        f"{report.words_checked} words, "
        f"{len(report.identity_words)} act trivially"
    )


def render_certificate(cert: TrivialityCertificate, alphabet: tuple[str, ...] = ("0", "1")) -> str:
    """`identity` ou `nontrivial<TAB>min_level=N<TAB>witness=w<TAB>explored=K`."""
    if cert.is_identity:
        return IDENTITY_LEVEL
    witness = format_letters(cert.witness_vertex or (), alphabet)
    return (
        f"nontrivial\tmin_level={cert.min_level}"
        f"\twitness={witness}\texplored={cert.orbit_explored}"
    )


class TsvReportWriter(IReportWriter):
    """
    Escreve o relatório em TSV.

    Uma linha por palavra, na ordem do relatório, e um comentário final
    `#` com contagens e tempo.
    """

    def render(self, report: SweepReport) -> str:
        lines = [TSV_HEADER]
        for row in report.rows:
            level = IDENTITY_LEVEL if row.min_level is None else str(row.min_level)
            lines.append(
                f"{format_group_word(row.word)}\t{row.length}\t{level}\t{row.orbit_explored}"
            )
        lines.append(
            f"# max_len={report.max_length}\twords={report.words_checked}"
            f"\tall_nontrivial={str(report.all_nontrivial).lower()}"
            f"\tseconds={report.timing:.3f}"
        )
        return "\n".join(lines) + "\n"

    def write(self, report: SweepReport, destination: Path) -> Path:
        destination = Path(destination)
        destination.parent.mkdir(parents=True, exist_ok=True)
        destination.write_text(self.render(report), encoding="utf-8")
        logger.info("Relatório salvo", path=str(destination), rows=report.words_checked)
        return destination
