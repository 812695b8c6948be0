"""
Comandos sobre palavras de grupo: chi, is-identity, min-level.
"""

import argparse
from typing import TextIO

from src.cli.dependencies import load_automaton
from src.domain.entities import Automaton
from src.infrastructure.persistence import render_certificate
from src.infrastructure.persistence.tsv_report import IDENTITY_LEVEL
from src.infrastructure.words import parse_group_word, parse_symbol_word
from src.services.aleshin import build_b, chi
from src.services.freeness import is_identity


def _resolve(args: argparse.Namespace) -> tuple[Automaton, tuple[int, ...]]:
    """Autômato (B por padrão) e a palavra de estados lida em --word."""
    if args.automaton is None:
        return build_b(), parse_group_word(args.word)
    a = load_automaton(args.automaton)
    return a, parse_symbol_word(args.word, a.state_names)


def cmd_chi(args: argparse.Namespace, out: TextIO) -> int:
    value = chi(parse_group_word(args.word))
    out.write(f"{value:+d}\n")
    return 0


def cmd_is_identity(args: argparse.Namespace, out: TextIO) -> int:
    a, xi = _resolve(args)
    cert = is_identity(xi, a)
    out.write(render_certificate(cert, a.alphabet_names) + "\n")
    return 0


def cmd_min_level(args: argparse.Namespace, out: TextIO) -> int:
    a, xi = _resolve(args)
    level = is_identity(xi, a).min_level
    out.write(f"{IDENTITY_LEVEL if level is None else level}\n")
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    p = subparsers.add_parser("chi", help="valor de χ numa palavra sobre Q±")
    p.add_argument("--word", required=True, help="ex.: a,b^-1")
    p.set_defaults(handler=cmd_chi)

    for name, handler, help_text in (
        ("is-identity", cmd_is_identity, "decide se A_ξ é a identidade"),
        ("min-level", cmd_min_level, "menor nível com ação não trivial"),
    ):
        p = subparsers.add_parser(name, help=help_text)
        p.add_argument("--word", required=True)
        p.add_argument(
            "--automaton",
            default=None,
            help="arquivo ou builtin:*; padrão: o autômato B",
        )
        p.set_defaults(handler=handler)
