"""
Entidade Permutation - bijeção num conjunto finito de símbolos indexados.
"""

import re
from dataclasses import dataclass
from typing import Sequence

from src.core.exceptions import UnknownSymbolError, WordSyntaxError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, slots=True)
class Permutation:
    """
    Permutação sobre {0, …, n−1}; `mapping[i]` é a imagem de i.

    A composição segue a ordem funcional: `p.compose(q)` aplica q primeiro.
    """

    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ValueError(f"Não é uma bijeção: {self.mapping}")

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(tuple(range(size)))

    @classmethod
    def from_cycles(cls, text: str, symbols: Sequence[str]) -> "Permutation":
        """
        Constrói a partir de notação de ciclos sobre símbolos nomeados.

        Exemplo: `(abc)` sobre ("a","b","c"), ou `(a^-1 b^-1)` sobre Q±.
        Dentro de um ciclo os símbolos podem vir colados quando têm um
        único caractere; caso contrário, separados por espaço ou vírgula.
        """
        lookup = {name: i for i, name in enumerate(symbols)}
        mapping = list(range(len(symbols)))
        seen: set[int] = set()
        stripped = _CYCLE_RE.sub("", text).strip()
        if stripped:
            raise WordSyntaxError(stripped, "fora de ciclo")
        for body in _CYCLE_RE.findall(text):
            tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
            if len(tokens) == 1 and tokens[0] not in lookup:
                tokens = list(tokens[0])
            cycle = []
            for token in tokens:
                if token not in lookup:
                    raise UnknownSymbolError(token, kind="symbol")
                index = lookup[token]
                if index in seen:
                    raise WordSyntaxError(token, "símbolo repetido nos ciclos")
                seen.add(index)
                cycle.append(index)
            for i, index in enumerate(cycle):
                mapping[index] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(mapping))

    @property
    def size(self) -> int:
        return len(self.mapping)

    def __call__(self, index: int) -> int:
        return self.mapping[index]

    def compose(self, other: "Permutation") -> "Permutation":
        """self ∘ other."""
        return Permutation(tuple(self.mapping[j] for j in other.mapping))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.mapping))
