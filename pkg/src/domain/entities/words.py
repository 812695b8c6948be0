"""
Entidades de palavras sobre o alfabeto com sinais Q± = {a,b,c,a⁻¹,b⁻¹,c⁻¹}.

Cada símbolo é empacotado como `base + 3 * sinal`: a=0, b=1, c=2,
a⁻¹=3, b⁻¹=4, c⁻¹=5. A mesma ordem nomeia os estados do autômato B
e as letras dos autômatos D e E.
"""

from dataclasses import dataclass
from enum import Enum, IntEnum

BASE_NAMES: tuple[str, ...] = ("a", "b", "c")
INVERSE_SUFFIX = "^-1"

# Nomes dos 6 símbolos, na ordem dos índices
QPM_NAMES: tuple[str, ...] = (*BASE_NAMES, *(f"{n}{INVERSE_SUFFIX}" for n in BASE_NAMES))
QPM_SIZE = len(QPM_NAMES)

A, B, C, A_INV, B_INV, C_INV = range(QPM_SIZE)

# Palavra de grupo (índices em Q±)
GroupWordQ = tuple[int, ...]


class Sign(IntEnum):
    """Sinal de um símbolo: * (PLUS) ou *⁻¹ (MINUS)."""

    PLUS = 0
    MINUS = 1

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.PLUS else "-"


# Sequência de sinais de uma palavra
Pattern = tuple[Sign, ...]


@dataclass(frozen=True, slots=True)
class SignedSymbol:
    """Gerador com sinal: base em {a,b,c} e sinal."""

    base: int
    sign: Sign

    @classmethod
    def from_index(cls, index: int) -> "SignedSymbol":
        return cls(base=index % 3, sign=Sign(index // 3))

    @property
    def index(self) -> int:
        return self.base + 3 * self.sign

    @property
    def name(self) -> str:
        return QPM_NAMES[self.index]

    def inverse(self) -> "SignedSymbol":
        return SignedSymbol(self.base, Sign(1 - self.sign))


def invert_letter(index: int) -> int:
    """Índice do símbolo inverso (a ↔ a⁻¹)."""
    return (index + 3) % QPM_SIZE


class WClass(str, Enum):
    """Classes W de palavras cuja forma sem c alterna sinais."""

    PLUS_PLUS = "W++"
    PLUS_MINUS = "W+-"
    MINUS_PLUS = "W-+"
    MINUS_MINUS = "W--"


class GeneratorTag(str, Enum):
    """Estado de E usado como gerador nas construções de testemunhas."""

    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"


def pattern_to_text(pattern: Pattern) -> str:
    return "".join(s.symbol for s in pattern)
