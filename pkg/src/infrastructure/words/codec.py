"""
Codec textual de palavras.

Palavras sobre estados (inclusive Q±) usam tokens separados por vírgula
ou espaço, com sufixo `^-1` para inversos e sílabas `a^3`, `b^-2`.
Vértices da árvore aceitam letras coladas (`110`) ou separadas.
"""

import re
from collections.abc import Sequence

from src.core.exceptions import UnknownSymbolError, WordSyntaxError
from src.domain.entities import QPM_NAMES, GroupWordQ, TreeWord
from src.domain.entities.words import INVERSE_SUFFIX

_SEPARATORS = re.compile(r"[\s,]+")
_SYLLABLE = re.compile(r"^(?P<base>.+?)\^(?P<exp>-?\d+)$")


def _split(text: str) -> list[str]:
    return [t for t in _SEPARATORS.split(text.strip()) if t]


def _expand_token(token: str, lookup: dict[str, int]) -> list[int]:
    if token in lookup:
        return [lookup[token]]

    match = _SYLLABLE.match(token)
    if match:
        base, exp = match["base"], int(match["exp"])
        if exp == 0:
            return []
        name = base if exp > 0 else f"{base}{INVERSE_SUFFIX}"
        if name not in lookup:
            raise UnknownSymbolError(name, kind="symbol")
        return [lookup[name]] * abs(exp)

    raise UnknownSymbolError(token, kind="symbol")


def _expand_glued(token: str, lookup: dict[str, int]) -> list[int] | None:
    """`ab^-1c` → [a, b⁻¹, c] quando os nomes base têm um caractere."""
    pieces = re.findall(r"[^\^](?:\^-?\d+)?", token)
    if "".join(pieces) != token:
        return None
    out: list[int] = []
    for piece in pieces:
        try:
            out.extend(_expand_token(piece, lookup))
        except UnknownSymbolError:
            return None
    return out


def parse_symbol_word(text: str, names: Sequence[str]) -> tuple[int, ...]:
    """
    Converte texto em palavra de índices sobre `names`.

    Raises:
        UnknownSymbolError: token que não nomeia um símbolo.
        WordSyntaxError: expoente malformado.
    """
    lookup = {name: i for i, name in enumerate(names)}
    word: list[int] = []
    for token in _split(text):
        try:
            word.extend(_expand_token(token, lookup))
        except UnknownSymbolError:
            glued = _expand_glued(token, lookup)
            if glued is None:
                if "^" in token and not _SYLLABLE.match(token):
                    raise WordSyntaxError(token, "expoente malformado") from None
                raise
            word.extend(glued)
    return tuple(word)


def format_symbol_word(word: Sequence[int], names: Sequence[str]) -> str:
    """Forma canônica: tokens separados por vírgula."""
    return ",".join(names[i] for i in word)


def parse_group_word(text: str) -> GroupWordQ:
    """Palavra sobre Q±, ex.: `a,b^-1,c` ou `a^2 c^-1`."""
    return parse_symbol_word(text, QPM_NAMES)


def format_group_word(word: GroupWordQ) -> str:
    return format_symbol_word(word, QPM_NAMES)


def parse_letters(text: str, alphabet: Sequence[str]) -> TreeWord:
    """
    Vértice da árvore.

    Com vírgulas ou espaços, cada token é uma letra; sem eles, cada
    caractere é uma letra (`110`).
    """
    lookup = {name: i for i, name in enumerate(alphabet)}
    stripped = text.strip()
    tokens = _split(stripped) if _SEPARATORS.search(stripped) else list(stripped)
    try:
        return tuple(lookup[t] for t in tokens)
    except KeyError as exc:
        raise UnknownSymbolError(str(exc.args[0]), kind="letter") from None


def format_letters(word: Sequence[int], alphabet: Sequence[str]) -> str:
    """Letras coladas se todos os nomes têm um caractere; senão, vírgulas."""
    if all(len(name) == 1 for name in alphabet):
        return "".join(alphabet[x] for x in word)
    return ",".join(alphabet[x] for x in word)
