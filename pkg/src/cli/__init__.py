"""
Linha de comando.

Cada subcomando é um adaptador fino sobre a biblioteca: a saída é a
serialização do resultado da chamada correspondente.
"""

import argparse
import sys
from typing import NoReturn, TextIO

from pydantic import ValidationError

from src.cli.commands import COMMAND_MODULES
from src.cli.schemas import FIELD_FLAGS
from src.core.config import get_settings
from src.core.exceptions import AutomataError, UsageError
from src.core.logging import get_logger, setup_logging

logger = get_logger(__name__)

EXIT_USAGE = 2


class CliArgumentParser(argparse.ArgumentParser):
    """Parser que sinaliza erros de uso com `UsageError` em vez de sair."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {' '.join(message.split())}")


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = CliArgumentParser(
        prog="aleshin",
        description="Autômatos de Mealy, o autômato de Aleshin e a verificação de liberdade.",
    )
    parser.add_argument(
        "--version", action="version", version=f"{settings.app_name} {settings.app_version}"
    )
    parser.add_argument(
        "--log-level",
        default=None,
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="nível de log (stderr)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMANDO")
    for module in COMMAND_MODULES:
        module.register(subparsers)
    return parser


def _describe_validation(exc: ValidationError) -> str:
    error = exc.errors()[0]
    field = str(error["loc"][0]) if error["loc"] else ""
    flag = FIELD_FLAGS.get(field, field)
    return f"{flag}: {error['msg']}"


def run(argv: list[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    """
    Executa um subcomando e devolve o código de saída.

    0 em sucesso, 1 quando uma verificação falha, 2 em erro de uso ou de
    leitura; diagnósticos vão numa única linha para `err`.
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help e --version
        return int(exc.code or 0)
    except UsageError as exc:
        err.write(f"erro [{exc.code}]: {exc.message}\n")
        return EXIT_USAGE

    if args.log_level:
        setup_logging(args.log_level)

    try:
        return args.handler(args, out)
    except AutomataError as exc:
        logger.debug("Erro de domínio", code=exc.code, details=exc.details)
        err.write(f"erro [{exc.code}]: {exc.message}\n")
    except ValidationError as exc:
        err.write(f"erro [INVALID_OPTION]: {_describe_validation(exc)}\n")
    except OSError as exc:
        err.write(f"erro [IO_ERROR]: {exc}\n")
    return EXIT_USAGE
