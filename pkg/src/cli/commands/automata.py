"""
Comandos sobre autômatos: parse, derive, union, act, act-word, orbit.
"""

import argparse
from pathlib import Path
from typing import TextIO

from src.cli.dependencies import load_automaton, write_automaton_text
from src.cli.schemas import DeriveOpEnum, DeriveRequest, OrbitRequest
from src.core.logging import get_logger
from src.infrastructure.moore import serialize
from src.infrastructure.words import (
    format_letters,
    format_symbol_word,
    parse_letters,
    parse_symbol_word,
)
from src.services.automata import (
    act_word,
    disjoint_union,
    dual_automaton,
    inverse_automaton,
    reverse_automaton,
    states_to_refs,
    transduce,
)
from src.services.orbits import word_orbit

logger = get_logger(__name__)

_DERIVATIONS = {
    DeriveOpEnum.INVERSE: inverse_automaton,
    DeriveOpEnum.REVERSE: reverse_automaton,
    DeriveOpEnum.DUAL: dual_automaton,
}


def cmd_parse(args: argparse.Namespace, out: TextIO) -> int:
    """Valida o arquivo e ecoa a forma canônica."""
    out.write(serialize(load_automaton(args.file)))
    return 0


def cmd_derive(args: argparse.Namespace, out: TextIO) -> int:
    request = DeriveRequest(op=args.op, file=args.file, output=args.output)
    derived = _DERIVATIONS[request.op](load_automaton(request.file))
    text = write_automaton_text(serialize(derived), request.output)
    if text is not None:
        out.write(text)
    return 0


def cmd_union(args: argparse.Namespace, out: TextIO) -> int:
    union = disjoint_union(load_automaton(args.first), load_automaton(args.second))
    text = write_automaton_text(serialize(union), args.output)
    if text is not None:
        out.write(text)
    return 0


def cmd_act(args: argparse.Namespace, out: TextIO) -> int:
    """ψ*(q, w) a partir do estado --state."""
    a = load_automaton(args.file)
    [init] = states_to_refs(a, [args.state])
    w = parse_letters(args.input, a.alphabet_names)
    out.write(format_letters_line(transduce(init, w), a.alphabet_names))
    return 0


def cmd_act_word(args: argparse.Namespace, out: TextIO) -> int:
    """A_ξ(w) para uma palavra de estados ξ."""
    a = load_automaton(args.file)
    xi = parse_symbol_word(args.word, a.state_names)
    w = parse_letters(args.input, a.alphabet_names)
    out.write(format_letters_line(act_word(a, xi, w), a.alphabet_names))
    return 0


def cmd_orbit(args: argparse.Namespace, out: TextIO) -> int:
    """Membros da órbita, um por linha, em ordem lexicográfica."""
    request = OrbitRequest(
        automaton=args.automaton, states=args.states, word=args.word, group=args.group
    )
    a = load_automaton(request.automaton)
    state_word = parse_symbol_word(request.states, a.state_names)
    gens = states_to_refs(a, [a.state_names[q] for q in dict.fromkeys(state_word)])
    xi = parse_symbol_word(request.word, a.alphabet_names)
    orbit = word_orbit(gens, xi, mode="group" if request.group else "semigroup")
    logger.info("Órbita calculada", size=len(orbit), generators=orbit.generator_tag)
    for member in orbit.sorted_members():
        out.write(format_symbol_word(member, a.alphabet_names) + "\n")
    return 0


def format_letters_line(word: tuple[int, ...], alphabet: tuple[str, ...]) -> str:
    return format_letters(word, alphabet) + "\n"


def register(subparsers: argparse._SubParsersAction) -> None:
    p = subparsers.add_parser("parse", help="valida um arquivo e imprime a forma canônica")
    p.add_argument("file", help="arquivo Moore ou builtin:aleshin|b|d|e")
    p.set_defaults(handler=cmd_parse)

    p = subparsers.add_parser("derive", help="autômato inverso, reverso ou dual")
    p.add_argument("--op", required=True, choices=[op.value for op in DeriveOpEnum])
    p.add_argument("file")
    p.add_argument("-o", "--output", type=Path, default=None)
    p.set_defaults(handler=cmd_derive)

    p = subparsers.add_parser("union", help="união disjunta de dois autômatos")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("-o", "--output", type=Path, default=None)
    p.set_defaults(handler=cmd_union)

    p = subparsers.add_parser("act", help="transdução a partir de um estado")
    p.add_argument("file")
    p.add_argument("--state", required=True)
    p.add_argument("--input", required=True, help="letras, ex.: 110 ou 1,1,0")
    p.set_defaults(handler=cmd_act)

    p = subparsers.add_parser("act-word", help="ação de uma palavra de estados")
    p.add_argument("file")
    p.add_argument("--word", required=True, help="estados, ex.: a,b^-1,c")
    p.add_argument("--input", required=True)
    p.set_defaults(handler=cmd_act_word)

    p = subparsers.add_parser("orbit", help="órbita de uma palavra sob estados iniciais")
    p.add_argument("--automaton", required=True)
    p.add_argument("--states", required=True, help="lista de estados, ex.: alpha,beta,gamma")
    p.add_argument("--word", required=True)
    p.add_argument("--group", action="store_true", help="inclui os inversos dos geradores")
    p.set_defaults(handler=cmd_orbit)
