"""
Resolução de dependências dos comandos.

Fornece autômatos (arquivo ou `builtin:`), o escritor de relatórios e o
serviço de varredura.
"""

from collections.abc import Callable
from functools import lru_cache
from pathlib import Path

from src.core.exceptions import EncodingError, UnknownSymbolError
from src.core.logging import get_logger
from src.domain.entities import Automaton
from src.domain.interfaces import IReportWriter
from src.infrastructure.moore import parse
from src.infrastructure.persistence import TsvReportWriter
from src.services.aleshin import build_aleshin, build_b, build_dual_d, build_e
from src.services.freeness import FreenessService

logger = get_logger(__name__)

BUILTIN_PREFIX = "builtin:"

BUILTINS: dict[str, Callable[[], Automaton]] = {
    "aleshin": build_aleshin,
    "b": build_b,
    "d": build_dual_d,
    "e": build_e,
}


# ============== Autômatos ==============

def load_automaton(ref: str) -> Automaton:
    """
    `builtin:aleshin|b|d|e` ou caminho de um arquivo no formato Moore.

    Raises:
        UnknownSymbolError: nome embutido desconhecido.
        OSError: arquivo ilegível.
        FormatError: arquivo malformado ou fora de UTF-8.
    """
    if ref.startswith(BUILTIN_PREFIX):
        name = ref[len(BUILTIN_PREFIX):]
        if name not in BUILTINS:
            raise UnknownSymbolError(name, kind="builtin")
        return BUILTINS[name]()

    path = Path(ref)
    logger.debug("Lendo autômato", path=str(path))
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(str(path), exc.start) from None
    return parse(text)


def write_automaton_text(text: str, output: Path | None) -> str | None:
    """Grava em `output`; sem destino, devolve o texto para stdout."""
    if output is None:
        return text
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")
    logger.info("Autômato salvo", path=str(output))
    return None


# ============== Serviços ==============

@lru_cache
def get_report_writer() -> IReportWriter:
    """Escritor de relatórios TSV (singleton)."""
    return TsvReportWriter()


def get_freeness_service(jobs: int | None, progress: bool | None) -> FreenessService:
    return FreenessService(jobs=jobs, progress=progress)
