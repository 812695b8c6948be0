"""
Exceções customizadas da aplicação.
Seguem o princípio de Single Responsibility.
"""

from typing import Any, Optional


class AutomataError(Exception):
    """Exceção base da aplicação."""

    def __init__(
        self,
        message: str,
        code: str = "INTERNAL_ERROR",
        details: Optional[dict[str, Any]] = None,
    ):
        self.message = message
        self.code = code
        self.details = details or {}
        super().__init__(self.message)


# === Exceções de Tabelas (validação de autômatos) ===

class TableError(AutomataError):
    """Tabelas de transição/saída malformadas."""

    def __init__(
        self,
        message: str,
        state: str | None = None,
        letter: str | None = None,
        details: Optional[dict] = None,
    ):
        super().__init__(message, code="TABLE_ERROR", details=details)
        if state is not None:
            self.details["state"] = state
        if letter is not None:
            self.details["letter"] = letter


class MissingEntryError(TableError):
    """Par (estado, letra) sem entrada nas tabelas."""

    def __init__(self, state: str, letter: str):
        super().__init__(
            f"Entrada ausente para o par ({state}, {letter})", state=state, letter=letter
        )
        self.code = "MISSING_ENTRY"


class SurplusEntryError(TableError):
    """Tabela com mais linhas que estados ou mais colunas que letras."""

    def __init__(self, surplus: int, state: str | None = None):
        where = f" na linha do estado {state}" if state is not None else " (linhas além dos estados)"
        super().__init__(
            f"{surplus} entrada(s) excedente(s){where}", state=state, details={"surplus": surplus}
        )
        self.code = "SURPLUS_ENTRY"


class DuplicateEntryError(TableError):
    """Par (estado, letra) ou símbolo declarado mais de uma vez."""

    def __init__(self, message: str, state: str | None = None, letter: str | None = None):
        super().__init__(message, state=state, letter=letter)
        self.code = "DUPLICATE_ENTRY"


class UnknownSymbolError(TableError):
    """Símbolo que não pertence aos estados nem ao alfabeto."""

    def __init__(self, symbol: str, kind: str = "symbol"):
        super().__init__(f"Símbolo desconhecido ({kind}): {symbol}", details={"kind": kind})
        self.code = "UNKNOWN_SYMBOL"
        self.details["symbol"] = symbol


class EmptyAlphabetError(TableError):
    """Alfabeto vazio."""

    def __init__(self) -> None:
        super().__init__("O alfabeto não pode ser vazio")
        self.code = "EMPTY_ALPHABET"


class EmptyStateSetError(TableError):
    """Conjunto de estados vazio."""

    def __init__(self) -> None:
        super().__init__("O conjunto de estados não pode ser vazio")
        self.code = "EMPTY_STATES"


# === Exceções de Índices ===

class IndexOutOfRangeError(AutomataError):
    """Índice de estado ou letra fora dos limites do autômato."""

    def __init__(self, index: int, bound: int, kind: str = "state"):
        super().__init__(
            f"Índice {kind} fora do intervalo: {index} (limite {bound})",
            code="INDEX_OUT_OF_RANGE",
            details={"index": index, "bound": bound, "kind": kind},
        )


class LetterOutOfRangeError(IndexOutOfRangeError):
    """Letra fora do alfabeto."""

    def __init__(self, index: int, bound: int):
        super().__init__(index, bound, kind="letter")
        self.code = "LETTER_OUT_OF_RANGE"


# === Exceções de Propriedades do Autômato ===

class NotInvertibleError(AutomataError):
    """Alguma linha de saída ψ(q,·) não é bijetiva."""

    def __init__(self, state: str | None = None):
        message = "Autômato não é invertível"
        if state is not None:
            message += f" (estado {state})"
        super().__init__(message, code="NOT_INVERTIBLE", details={"state": state})


class NotReversibleError(AutomataError):
    """Alguma coluna de transição φ(·,x) não é bijetiva."""

    def __init__(self, letter: str):
        super().__init__(
            f"Autômato reverso não definido: φ(·,{letter}) não é bijetiva",
            code="NOT_REVERSIBLE",
            details={"letter": letter},
        )


# === Exceções de Composição ===

class CompositionError(AutomataError):
    """Erro ao combinar autômatos."""

    def __init__(self, message: str, details: Optional[dict] = None):
        super().__init__(message, code="COMPOSITION_ERROR", details=details)


class AlphabetMismatchError(CompositionError):
    """Autômatos sobre alfabetos diferentes."""

    def __init__(self, left: tuple[str, ...], right: tuple[str, ...]):
        super().__init__(
            "Alfabetos diferentes na união disjunta",
            details={"left": list(left), "right": list(right)},
        )
        self.code = "ALPHABET_MISMATCH"


class StateClashError(CompositionError):
    """Estados com o mesmo nome nos dois autômatos."""

    def __init__(self, shared: list[str]):
        super().__init__(
            f"União disjunta não definida: estados em comum {shared}",
            details={"shared": shared},
        )
        self.code = "STATE_CLASH"


class AutomatonMismatchError(CompositionError):
    """Geradores que não compartilham o mesmo autômato."""

    def __init__(self) -> None:
        super().__init__("Todos os geradores devem pertencer ao mesmo autômato")
        self.code = "AUTOMATON_MISMATCH"


# === Exceções de Formato (arquivos e tokens) ===

class FormatError(AutomataError):
    """Erro de formato textual."""

    def __init__(self, message: str, line: int | None = None, details: Optional[dict] = None):
        if line is not None:
            message = f"linha {line}: {message}"
        super().__init__(message, code="FORMAT_ERROR", details=details)
        if line is not None:
            self.details["line"] = line
        self.line = line


class MooreSyntaxError(FormatError):
    """Linha que não segue a gramática do diagrama de Moore."""

    def __init__(self, message: str, line: int):
        super().__init__(message, line=line)
        self.code = "SYNTAX_ERROR"


class UndeclaredSymbolError(FormatError):
    """Símbolo usado numa linha `trans` sem ter sido declarado."""

    def __init__(self, symbol: str, line: int):
        super().__init__(f"símbolo não declarado: {symbol}", line=line, details={"symbol": symbol})
        self.code = "UNDECLARED_SYMBOL"


class DuplicateTransitionError(FormatError):
    """Mais de uma linha `trans` para o mesmo par."""

    def __init__(self, state: str, letter: str, line: int):
        super().__init__(
            f"transição duplicada para ({state}, {letter})",
            line=line,
            details={"state": state, "letter": letter},
        )
        self.code = "DUPLICATE_TRANSITION"


class MissingTransitionError(FormatError):
    """Par (estado, letra) sem linha `trans`."""

    def __init__(self, state: str, letter: str):
        super().__init__(
            f"transição ausente para ({state}, {letter})",
            details={"state": state, "letter": letter},
        )
        self.code = "MISSING_TRANSITION"


class LimitExceededError(FormatError):
    """Mais estados ou letras do que o formato admite."""

    def __init__(self, kind: str, count: int, limit: int, line: int):
        super().__init__(
            f"{count} {kind} excede o máximo de {limit}",
            line=line,
            details={"kind": kind, "count": count, "limit": limit},
        )
        self.code = "LIMIT_EXCEEDED"


class EncodingError(FormatError):
    """Arquivo que não é UTF-8 válido."""

    def __init__(self, source: str, position: int):
        super().__init__(
            f"{source}: bytes inválidos em UTF-8 (posição {position})",
            details={"source": source, "position": position},
        )
        self.code = "ENCODING"


class UnserializableError(FormatError):
    """Autômato válido que o formato textual não consegue representar."""

    def __init__(self, reason: str, details: Optional[dict] = None):
        super().__init__(f"não serializável: {reason}", details=details)
        self.code = "NOT_SERIALIZABLE"


class WordSyntaxError(FormatError):
    """Token inválido numa palavra."""

    def __init__(self, token: str, reason: str = "token inválido"):
        super().__init__(f"{reason}: {token!r}", details={"token": token})
        self.code = "WORD_SYNTAX"


# === Exceções de Palavras e Padrões ===

class WordError(AutomataError):
    """Erro de pré-condição sobre palavras e padrões."""

    def __init__(self, message: str, details: Optional[dict] = None):
        super().__init__(message, code="WORD_ERROR", details=details)


class ReducibleWordError(WordError):
    """Palavra livremente redutível onde se exige irredutível."""

    def __init__(self, word: str):
        super().__init__(f"Palavra livremente redutível: {word}", details={"word": word})
        self.code = "REDUCIBLE"


class EmptyPatternError(WordError):
    """Padrão vazio onde se exige não vazio."""

    def __init__(self) -> None:
        super().__init__("O padrão não pode ser vazio")
        self.code = "EMPTY_PATTERN"


class BadPatternError(WordError):
    """Padrão fora das hipóteses da construção."""

    def __init__(self, pattern: str, reason: str):
        super().__init__(f"Padrão {pattern} inválido: {reason}", details={"pattern": pattern})
        self.code = "BAD_PATTERN"


class WitnessError(WordError):
    """Testemunha construída não satisfaz a pós-condição."""

    def __init__(self, construction: str, reason: str):
        super().__init__(
            f"Pós-condição violada em {construction}: {reason}",
            details={"construction": construction},
        )
        self.code = "WITNESS_FAILED"


# === Exceções de Linha de Comando ===

class UsageError(AutomataError):
    """Argumentos inválidos na linha de comando."""

    def __init__(self, message: str):
        super().__init__(message, code="USAGE")
