"""
Formato textual de diagramas de Moore.

Gramática (uma declaração por linha, tokens separados por espaços/tabs):

    alphabet <sym>+
    states <sym>+
    trans <estado> <entrada> <próximo> <saída>
    # comentário

Declarações precedem transições; linhas em branco são ignoradas.
"""

from dataclasses import dataclass, field

from src.core.config import get_settings
from src.core.exceptions import (
    DuplicateTransitionError,
    LimitExceededError,
    MissingEntryError,
    MissingTransitionError,
    MooreSyntaxError,
    UndeclaredSymbolError,
    UnserializableError,
)
from src.core.logging import get_logger
from src.domain.entities import Automaton, RawTables
from src.services.automata import validate

logger = get_logger(__name__)

Transition = tuple[str, str, str, str]


@dataclass
class MooreDocument:
    """Documento já tokenizado, antes da validação das tabelas."""

    alphabet: list[str] = field(default_factory=list)
    states: list[str] = field(default_factory=list)
    transitions: list[Transition] = field(default_factory=list)
    comments: list[str] = field(default_factory=list)
    # Linha de origem de cada transição, para diagnósticos
    transition_lines: list[int] = field(default_factory=list)

    def to_raw(self) -> RawTables:
        return RawTables(
            state_names=tuple(self.states),
            alphabet_names=tuple(self.alphabet),
            entries=tuple(self.transitions),
        )

    @classmethod
    def from_automaton(cls, a: Automaton, comments: list[str] | None = None) -> "MooreDocument":
        """Forma canônica: transições ordenadas por (estado, letra)."""
        transitions = [
            (
                a.state_names[q],
                a.alphabet_names[x],
                a.state_names[a.transition[q][x]],
                a.alphabet_names[a.output[q][x]],
            )
            for q in range(a.num_states)
            for x in range(a.num_letters)
        ]
        return cls(
            alphabet=list(a.alphabet_names),
            states=list(a.state_names),
            transitions=transitions,
            comments=list(comments or []),
        )


def read_document(text: str) -> MooreDocument:
    """
    Tokeniza e checa a gramática linha a linha.

    Raises:
        MooreSyntaxError: linha malformada, declaração fora de ordem ou
            documento sem declarações.
        UndeclaredSymbolError: símbolo não declarado numa transição.
        DuplicateTransitionError: segundo `trans` para o mesmo par.
        LimitExceededError: mais estados ou letras que o limite configurado.
    """
    settings = get_settings()
    doc = MooreDocument()
    seen: dict[tuple[str, str], int] = {}
    declared: dict[str, int] = {}

    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line:
            continue
        if line.startswith("#"):
            doc.comments.append(line[1:].strip())
            continue

        keyword, *args = line.split()

        if keyword in ("alphabet", "states"):
            if doc.transitions:
                raise MooreSyntaxError(f"'{keyword}' depois das transições", number)
            if keyword in declared:
                raise MooreSyntaxError(
                    f"'{keyword}' repetido (primeira declaração na linha {declared[keyword]})",
                    number,
                )
            if not args:
                raise MooreSyntaxError(f"'{keyword}' sem símbolos", number)
            if len(set(args)) != len(args):
                raise MooreSyntaxError(f"símbolo repetido em '{keyword}'", number)
            limit = settings.moore_max_letters if keyword == "alphabet" else settings.moore_max_states
            if len(args) > limit:
                raise LimitExceededError(keyword, len(args), limit, number)
            declared[keyword] = number
            if keyword == "alphabet":
                doc.alphabet = args
            else:
                doc.states = args

        elif keyword == "trans":
            if len(declared) < 2:
                raise MooreSyntaxError("'trans' antes de 'alphabet' e 'states'", number)
            if len(args) != 4:
                raise MooreSyntaxError(
                    f"'trans' espera 4 símbolos, recebeu {len(args)}", number
                )
            state, letter, next_state, out_letter = args
            for symbol, pool in (
                (state, doc.states),
                (letter, doc.alphabet),
                (next_state, doc.states),
                (out_letter, doc.alphabet),
            ):
                if symbol not in pool:
                    raise UndeclaredSymbolError(symbol, number)
            if (state, letter) in seen:
                raise DuplicateTransitionError(state, letter, number)
            seen[(state, letter)] = number
            doc.transitions.append((state, letter, next_state, out_letter))
            doc.transition_lines.append(number)

        else:
            raise MooreSyntaxError(f"palavra-chave desconhecida '{keyword}'", number)

    if len(declared) < 2:
        missing = [k for k in ("alphabet", "states") if k not in declared]
        last = len(text.splitlines()) or 1
        raise MooreSyntaxError(f"declaração ausente: {', '.join(missing)}", last)

    return doc


def parse(text: str) -> Automaton:
    """
    Lê um documento e devolve o autômato validado.

    Raises:
        MooreSyntaxError, UndeclaredSymbolError, DuplicateTransitionError,
        MissingTransitionError, LimitExceededError.
    """
    doc = read_document(text)
    try:
        automaton = validate(doc.to_raw())
    except MissingEntryError as exc:
        raise MissingTransitionError(exc.details["state"], exc.details["letter"]) from None

    logger.debug(
        "Documento de Moore lido",
        states=automaton.num_states,
        letters=automaton.num_letters,
    )
    return automaton


def check_serializable(a: Automaton, comments: list[str] | None = None) -> None:
    """
    Garante que `parse(serialize(a))` devolve `a`.

    Raises:
        UnserializableError: nome vazio ou com espaços, mais estados ou
            letras que o limite configurado, ou comentário multilinha.
    """
    settings = get_settings()
    for kind, names, limit in (
        ("alphabet", a.alphabet_names, settings.moore_max_letters),
        ("states", a.state_names, settings.moore_max_states),
    ):
        if len(names) > limit:
            raise UnserializableError(
                f"{len(names)} símbolos em '{kind}' (máximo {limit})",
                details={"kind": kind, "count": len(names), "limit": limit},
            )
        for name in names:
            if not name or name != "".join(name.split()):
                raise UnserializableError(
                    f"símbolo {name!r} em '{kind}' não é um token",
                    details={"kind": kind, "symbol": name},
                )
    for comment in comments or []:
        if len(comment.splitlines()) > 1:
            raise UnserializableError("comentário com quebra de linha")


def serialize(a: Automaton, comments: list[str] | None = None) -> str:
    """
    Forma canônica: comentários opcionais, `alphabet`, `states` e as
    transições ordenadas por (índice do estado, índice da letra).

    Raises:
        UnserializableError: ver `check_serializable`.
    """
    check_serializable(a, comments)
    doc = MooreDocument.from_automaton(a, comments)
    lines = [f"# {c}" if c else "#" for c in doc.comments]
    lines.append("alphabet " + " ".join(doc.alphabet))
    lines.append("states " + " ".join(doc.states))
    lines.extend(f"trans {s} {x} {p} {y}" for s, x, p, y in doc.transitions)
    return "\n".join(lines) + "\n"
