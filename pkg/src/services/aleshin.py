"""
Autômatos de Aleshin e aparato de palavras sobre Q±.

Construtores de A, I′, B, D e E, o homomorfismo χ, padrões, redução
livre, levantamentos π_τ, classes W e conjuntos Z.
"""

from dataclasses import dataclass
from functools import lru_cache

from src.core.exceptions import ReducibleWordError
from src.domain.entities import (
    Automaton,
    GroupWordQ,
    InitialRef,
    Pattern,
    Permutation,
    RawTables,
    Sign,
    SignedSymbol,
    WClass,
)
from src.domain.entities.words import (
    BASE_NAMES,
    INVERSE_SUFFIX,
    QPM_NAMES,
    QPM_SIZE,
    invert_letter,
)
from src.infrastructure.words import format_group_word
from src.services.automata import (
    disjoint_union,
    dual_automaton,
    inverse_automaton,
    rename_states,
    validate,
)

# Estados do autômato E
E_STATE_NAMES: tuple[str, ...] = ("alpha", "beta", "gamma")
ALPHA, BETA, GAMMA = range(3)


# ============== Permutações fixas ==============

def qpm_permutation(cycles: str) -> Permutation:
    """Permutação de Q± em notação de ciclos, ex.: `(a b c)(a^-1 c^-1)`."""
    return Permutation.from_cycles(cycles, QPM_NAMES)


def base_permutation(cycles: str) -> Permutation:
    """Permutação de {a,b,c} em notação de ciclos, ex.: `(abc)`."""
    return Permutation.from_cycles(cycles, BASE_NAMES)


SIGMA_ALPHA = qpm_permutation("(a^-1 b^-1)")
SIGMA_BETA = qpm_permutation("(a b)")
SIGMA_GAMMA = qpm_permutation("(b c)(b^-1 c^-1)")


# ============== Construtores ==============

# Tabelas do autômato A: (estado, entrada, próximo, saída)
_ALESHIN_ENTRIES: tuple[tuple[str, str, str, str], ...] = (
    ("a", "0", "c", "1"),
    ("a", "1", "b", "0"),
    ("b", "0", "b", "1"),
    ("b", "1", "c", "0"),
    ("c", "0", "a", "0"),
    ("c", "1", "a", "1"),
)


@lru_cache(maxsize=1)
def build_aleshin() -> Automaton:
    """Autômato A de 3 estados sobre {0,1}."""
    return validate(
        RawTables(
            state_names=BASE_NAMES,
            alphabet_names=("0", "1"),
            entries=_ALESHIN_ENTRIES,
        )
    )


@lru_cache(maxsize=1)
def build_b() -> Automaton:
    """
    B = A ⊔ I′, com I′ o inverso de A renomeado para a⁻¹, b⁻¹, c⁻¹.

    Estados na ordem de Q±, de modo que B_q = A_q e B_{q⁻¹} = A_q⁻¹.
    """
    aleshin = build_aleshin()
    renamed = rename_states(
        inverse_automaton(aleshin),
        {name: f"{name}{INVERSE_SUFFIX}" for name in BASE_NAMES},
    )
    return disjoint_union(aleshin, renamed)


@lru_cache(maxsize=1)
def build_dual_d() -> Automaton:
    """Dual D de B: estados 0 e 1, alfabeto Q±."""
    return dual_automaton(build_b())


@lru_cache(maxsize=1)
def build_e() -> Automaton:
    """
    Autômato auxiliar E com estados α, β, γ sobre Q±.

    α e β trocam entre si ao ler a, b, a⁻¹, b⁻¹ e ficam ao ler c, c⁻¹;
    γ é absorvente. As saídas são σ_α, σ_β e σ_γ.
    """
    swaps = {0, 1, 3, 4}
    transition = (
        tuple(BETA if x in swaps else ALPHA for x in range(QPM_SIZE)),
        tuple(ALPHA if x in swaps else BETA for x in range(QPM_SIZE)),
        (GAMMA,) * QPM_SIZE,
    )
    output = (SIGMA_ALPHA.mapping, SIGMA_BETA.mapping, SIGMA_GAMMA.mapping)
    return Automaton(
        state_names=E_STATE_NAMES,
        alphabet_names=QPM_NAMES,
        transition=transition,
        output=output,
    )


def e_generator(state: int) -> InitialRef:
    """E_α, E_β ou E_γ."""
    return InitialRef(build_e(), state)


def d_generator(state: int) -> InitialRef:
    """D_0 ou D_1."""
    return InitialRef(build_dual_d(), state)


# ============== Levantamentos π_τ ==============

@dataclass(frozen=True, slots=True)
class WordLift:
    """π_τ: aplica τ̃ letra a letra, preservando sinais."""

    permutation: Permutation

    @property
    def label(self) -> str:
        images = "".join(BASE_NAMES[i] for i in self.permutation.mapping[:3])
        return f"pi[{images}]"

    def __call__(self, word: GroupWordQ) -> GroupWordQ:
        mapping = self.permutation.mapping
        return tuple(mapping[x] for x in word)


def lift_permutation(tau: Permutation) -> WordLift:
    """Levanta τ de {a,b,c} para τ̃ em Q±: τ̃(q⁻¹) = τ(q)⁻¹."""
    if tau.size != 3:
        raise ValueError(f"τ deve agir em {{a,b,c}} (tamanho {tau.size})")
    symbols = (SignedSymbol.from_index(i) for i in range(QPM_SIZE))
    mapping = tuple(SignedSymbol(tau(s.base), s.sign).index for s in symbols)
    return WordLift(Permutation(mapping))


def parity_transform(xi: GroupWordQ, even: Permutation, odd: Permutation) -> GroupWordQ:
    """
    Descrição letra a letra de E_α, E_β, D_0, D_1.

    A i-ésima letra usa `even` se o número de letras a, b, a⁻¹, b⁻¹ lidas
    antes dela é par, e `odd` caso contrário.
    """
    out = []
    parity = 0
    for q in xi:
        out.append(odd.mapping[q] if parity else even.mapping[q])
        if q % 3 != 2:
            parity ^= 1
    return tuple(out)


# ============== Palavras ==============

def chi(xi: GroupWordQ) -> int:
    """χ(ξ) ∈ {+1, −1}: −1 em a, b e inversos, +1 em c, c⁻¹."""
    odd = sum(1 for q in xi if q % 3 != 2) & 1
    return -1 if odd else 1


def pattern_of(xi: GroupWordQ) -> Pattern:
    """Sinais das letras de ξ, em ordem."""
    return tuple(Sign.MINUS if q >= 3 else Sign.PLUS for q in xi)


def is_freely_irreducible(xi: GroupWordQ) -> bool:
    """Nenhum par adjacente formado por um símbolo e seu inverso."""
    return all(xi[i + 1] != invert_letter(xi[i]) for i in range(len(xi) - 1))


def free_reduce(xi: GroupWordQ) -> GroupWordQ:
    """Forma normal no grupo livre (cancela pares adjacentes até estabilizar)."""
    stack: list[int] = []
    for q in xi:
        if stack and stack[-1] == invert_letter(q):
            stack.pop()
        else:
            stack.append(q)
    return tuple(stack)


def inverse_word(xi: GroupWordQ) -> GroupWordQ:
    """Inverso formal: ordem invertida e cada letra trocada pelo inverso."""
    return tuple(invert_letter(q) for q in reversed(xi))


def reverse_word(xi: GroupWordQ) -> GroupWordQ:
    """Palavra lida de trás para frente; letras inalteradas."""
    return tuple(reversed(xi))


def strip_c(xi: GroupWordQ) -> GroupWordQ:
    """r(ξ): remove todas as letras c e c⁻¹."""
    return tuple(q for q in xi if q % 3 != 2)


_W_CLASS_BY_ENDS: dict[tuple[Sign, Sign], WClass] = {
    (Sign.PLUS, Sign.PLUS): WClass.PLUS_PLUS,
    (Sign.PLUS, Sign.MINUS): WClass.PLUS_MINUS,
    (Sign.MINUS, Sign.PLUS): WClass.MINUS_PLUS,
    (Sign.MINUS, Sign.MINUS): WClass.MINUS_MINUS,
}


def w_class(xi: GroupWordQ) -> frozenset[WClass]:
    """
    Classes W às quais ξ pertence.

    O resultado é um conjunto: ε está em W+- e em W-+ ao mesmo tempo;
    palavras fora de todas as classes devolvem o conjunto vazio.
    """
    r = strip_c(xi)
    if not r:
        return frozenset({WClass.PLUS_MINUS, WClass.MINUS_PLUS})
    signs = pattern_of(r)
    if any(signs[i] == signs[i + 1] for i in range(len(signs) - 1)):
        return frozenset()
    return frozenset({_W_CLASS_BY_ENDS[(signs[0], signs[-1])]})


def z_set(xi: GroupWordQ) -> frozenset[GroupWordQ]:
    """
    Z(ξ): palavras irredutíveis de mesmo padrão que coincidem com ξ
    exceto, talvez, na última letra.

    Raises:
        ReducibleWordError: ξ é livremente redutível.
    """
    if not is_freely_irreducible(xi):
        raise ReducibleWordError(format_group_word(xi))
    if not xi:
        return frozenset({xi})
    prefix, last = xi[:-1], xi[-1]
    sign_offset = 3 * (last // 3)
    candidates = (prefix + (base + sign_offset,) for base in range(3))
    return frozenset(w for w in candidates if is_freely_irreducible(w[-2:]))
