"""
Aleshin Automata - ponto de entrada da linha de comando.

Uso:
    aleshin act builtin:aleshin --state a --input 110
    aleshin verify-freeness --max-len 6
"""

import sys

from src.cli import run
from src.core.logging import setup_logging


def main(argv: list[str] | None = None) -> int:
    """Configura logging e executa o subcomando."""
    setup_logging()
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
