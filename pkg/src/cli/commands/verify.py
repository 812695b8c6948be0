"""
Comandos de verificação: verify-freeness e verify-lemmas.

Saída 0 quando tudo passa e 1 quando alguma verificação falha.
"""

import argparse
from pathlib import Path
from typing import TextIO

from src.cli.dependencies import get_freeness_service, get_report_writer
from src.cli.schemas import VerifyFreenessRequest, VerifyLemmasRequest
from src.core.config import get_settings
from src.infrastructure.persistence import render_summary
from src.services.lemma_suite import LEMMAS, run_lemma_suite


def cmd_verify_freeness(args: argparse.Namespace, out: TextIO) -> int:
    request = VerifyFreenessRequest(
        max_len=args.max_len,
        jobs=args.jobs,
        report=args.report,
        progress=False if args.no_progress else None,
    )
    service = get_freeness_service(request.jobs, request.progress)
    report = service.verify(request.max_len)

    if request.report is not None:
        get_report_writer().write(report, request.report)

    out.write(render_summary(report) + "\n")
    return 0 if report.all_nontrivial else 1


def cmd_verify_lemmas(args: argparse.Namespace, out: TextIO) -> int:
    max_len = get_settings().lemma_max_len if args.max_len is None else args.max_len
    request = VerifyLemmasRequest(max_len=max_len, lemmas=args.lemma or [])

    results = run_lemma_suite(request.max_len, request.lemmas or None)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        line = f"{status}\t{result.name}\tchecked={result.checked}"
        if result.detail:
            line += f"\t{result.detail}"
        out.write(line + "\n")
    return 0 if all(r.passed for r in results) else 1


def register(subparsers: argparse._SubParsersAction) -> None:
    p = subparsers.add_parser(
        "verify-freeness", help="varredura das palavras reduzidas até --max-len"
    )
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None, help="padrão: paralelismo disponível")
    p.add_argument("--report", type=Path, default=None, help="relatório TSV")
    p.add_argument("--no-progress", action="store_true", help="sem barra de progresso")
    p.set_defaults(handler=cmd_verify_freeness)

    p = subparsers.add_parser("verify-lemmas", help="suíte executável de lemas")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument(
        "--lemma",
        action="append",
        choices=list(LEMMAS),
        help="restringe a um lema (repetível)",
    )
    p.set_defaults(handler=cmd_verify_lemmas)
