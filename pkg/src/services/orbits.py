"""
Motor de órbitas sobre palavras de Q±.

Órbitas por BFS sob geradores de G(E)/G(D), classes de palavras
irredutíveis por padrão e as construções de testemunhas usadas na
prova de que cada classe é uma única órbita.
"""

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from src.core.exceptions import BadPatternError, EmptyPatternError, WitnessError
from src.core.logging import get_logger
from src.domain.entities import (
    GeneratorTag,
    GroupWordQ,
    InitialRef,
    OrbitSet,
    Pattern,
    Sign,
    SignedSymbol,
)
from src.domain.entities.words import (
    A,
    B,
    B_INV,
    C,
    C_INV,
    invert_letter,
    pattern_to_text,
)
from src.domain.interfaces import WordTransformation
from src.services.aleshin import (
    ALPHA,
    BETA,
    GAMMA,
    chi,
    e_generator,
    is_freely_irreducible,
    pattern_of,
    reverse_word,
    z_set,
)
from src.services.automata import OrbitMode, all_words, generator_maps, orbit_closure

logger = get_logger(__name__)

_TAG_STATE = {GeneratorTag.ALPHA: ALPHA, GeneratorTag.BETA: BETA, GeneratorTag.GAMMA: GAMMA}


def e_generators() -> list[InitialRef]:
    """{E_α, E_β, E_γ}."""
    return [e_generator(ALPHA), e_generator(BETA), e_generator(GAMMA)]


def tag_generator(tag: GeneratorTag) -> InitialRef:
    return e_generator(_TAG_STATE[tag])


# ──────────────────────────────────────────────
#  Órbitas
# ──────────────────────────────────────────────

def word_orbit(
    gens: Sequence[InitialRef], xi: GroupWordQ, mode: OrbitMode = "group"
) -> OrbitSet:
    """
    Órbita de ξ sob os geradores (e seus inversos, no modo grupo).

    Raises:
        AutomatonMismatchError: geradores de autômatos diferentes.
        NotInvertibleError: modo grupo sem autômato inverso.
    """
    maps = generator_maps(gens, mode)
    if gens:
        gens[0].automaton.check_tree_word(xi)
    members = orbit_closure(maps, tuple(xi))
    return OrbitSet(
        members=members,
        generator_tag=",".join(g.label for g in gens),
        length=len(xi),
    )


def orbit_partition(
    maps: Sequence[WordTransformation], alphabet_size: int, length: int
) -> frozenset[frozenset[tuple[int, ...]]]:
    """Partição de todas as palavras de um comprimento em órbitas."""
    blocks: list[frozenset[tuple[int, ...]]] = []
    covered: set[tuple[int, ...]] = set()
    for word in all_words(alphabet_size, length):
        if word in covered:
            continue
        block = orbit_closure(maps, word)
        covered |= block
        blocks.append(block)
    return frozenset(blocks)


def same_orbit(maps: Sequence[WordTransformation], xi1: GroupWordQ, xi2: GroupWordQ) -> bool:
    return len(xi1) == len(xi2) and xi2 in orbit_closure(maps, tuple(xi1))


def connecting_word(
    maps: Sequence[WordTransformation], source: tuple[int, ...], target: tuple[int, ...]
) -> list[str] | None:
    """
    Rótulos g₁…g_k com g_k(…g₁(source)) = target, ou None.

    BFS com ponteiros de pai; o caminho devolvido é um dos mais curtos.
    """
    if source == target:
        return []
    parent: dict[tuple[int, ...], tuple[tuple[int, ...], str]] = {}
    visited = {source}
    frontier = [source]
    while frontier:
        discovered = []
        for word in frontier:
            for g in maps:
                image = g(word)
                if image in visited:
                    continue
                visited.add(image)
                parent[image] = (word, g.label)
                if image == target:
                    path = []
                    node = image
                    while node != source:
                        node, label = parent[node]
                        path.append(label)
                    return path[::-1]
                discovered.append(image)
        frontier = sorted(discovered)
    return None


# ──────────────────────────────────────────────
#  Padrões e classes irredutíveis
# ──────────────────────────────────────────────

def all_patterns(n: int) -> Iterator[Pattern]:
    """Os 2ⁿ padrões de comprimento n, com + antes de −."""
    return itertools.product((Sign.PLUS, Sign.MINUS), repeat=n)


def _letters(sign: Sign) -> tuple[int, ...]:
    return tuple(SignedSymbol(base, sign).index for base in range(3))


def irreducible_class(v: Pattern) -> frozenset[GroupWordQ]:
    """Todas as palavras livremente irredutíveis que seguem o padrão v."""
    words: list[GroupWordQ] = [()]
    for sign in v:
        words = [
            w + (q,)
            for w in words
            for q in _letters(sign)
            if not w or w[-1] != invert_letter(q)
        ]
    return frozenset(words)


def irreducible_class_size(v: Pattern) -> int:
    """3·∏(2 se o sinal muda, 3 se repete); 1 para o padrão vazio."""
    if not v:
        return 1
    size = 3
    for prev, cur in zip(v, v[1:]):
        size *= 2 if prev != cur else 3
    return size


def smallest_irreducible(v: Pattern) -> GroupWordQ:
    """Menor palavra irredutível (ordem de índices) que segue v."""
    word: list[int] = []
    for sign in v:
        word.append(
            next(q for q in _letters(sign) if not word or word[-1] != invert_letter(q))
        )
    return tuple(word)


# ──────────────────────────────────────────────
#  Testemunhas
# ──────────────────────────────────────────────

@dataclass(frozen=True)
class Ind5Witness:
    xi_a: GroupWordQ
    xi_b: GroupWordQ
    generator: GeneratorTag


@dataclass(frozen=True)
class Ind6Witness:
    """
    Tabela 3×3 ξ_{q₁q₂} indexada por (q₁, q₂) ∈ {0,1,2}², com q=0,1,2
    para a,b,c, e o gerador g_q tal que g_q(ξ_{qa}) = ξ_{qb}.
    """

    table: tuple[tuple[GroupWordQ, ...], ...]
    generators: tuple[GeneratorTag, GeneratorTag, GeneratorTag]

    def word(self, q1: int, q2: int) -> GroupWordQ:
        return self.table[q1][q2]


def ind2_witnesses(v: Pattern) -> tuple[GroupWordQ, GroupWordQ]:
    """
    Duas palavras irredutíveis que seguem v com χ opostos.

    ξ₁ troca + por a e − por b⁻¹; ξ₂ troca a primeira letra por c ou c⁻¹.

    Raises:
        EmptyPatternError: v vazio.
    """
    if not v:
        raise EmptyPatternError()
    xi1 = tuple(A if s is Sign.PLUS else B_INV for s in v)
    xi2 = (C if v[0] is Sign.PLUS else C_INV,) + xi1[1:]
    return xi1, xi2


def _fill_by_neighbor(v0: Pattern, look_ahead: bool) -> GroupWordQ:
    """
    + vira a quando o vizinho é −, senão c; − vira b⁻¹ quando o vizinho
    é +, senão c⁻¹. O vizinho é o seguinte (look_ahead) ou o anterior;
    sem vizinho vale o "senão".
    """
    out = []
    for i, sign in enumerate(v0):
        j = i + 1 if look_ahead else i - 1
        neighbor = v0[j] if 0 <= j < len(v0) else None
        if sign is Sign.PLUS:
            out.append(A if neighbor is Sign.MINUS else C)
        else:
            out.append(B_INV if neighbor is Sign.PLUS else C_INV)
    return tuple(out)


def _append(base: GroupWordQ, q: int, sign: Sign) -> GroupWordQ:
    return base + (q if sign is Sign.PLUS else invert_letter(q),)


def ind5_witnesses(v: Pattern) -> Ind5Witness:
    """
    ξ_a, ξ_b com Z(ξ_a) = {ξ_a, ξ_b} e g(ξ_a) = ξ_b, g ∈ {E_α, E_β}.

    Raises:
        BadPatternError: |v| < 2 ou os dois últimos sinais iguais.
        WitnessError: alguma pós-condição falhou.
    """
    text = pattern_to_text(v)
    if len(v) < 2:
        raise BadPatternError(text, "comprimento mínimo 2")
    if v[-1] == v[-2]:
        raise BadPatternError(text, "os dois últimos sinais devem diferir")

    eta = _fill_by_neighbor(v[:-1], look_ahead=True)
    xi_a = _append(eta, A, v[-1])
    xi_b = _append(eta, B, v[-1])
    tag = GeneratorTag.ALPHA if v[0] is Sign.PLUS else GeneratorTag.BETA

    _check(text, "ind5", is_freely_irreducible(xi_a) and is_freely_irreducible(xi_b),
           "palavras redutíveis")
    _check(text, "ind5", pattern_of(xi_a) == v and pattern_of(xi_b) == v, "padrão divergente")
    _check(text, "ind5", z_set(xi_a) == {xi_a, xi_b}, "Z(ξ_a) ≠ {ξ_a, ξ_b}")
    _check(text, "ind5", tag_generator(tag)(xi_a) == xi_b, "g(ξ_a) ≠ ξ_b")
    return Ind5Witness(xi_a=xi_a, xi_b=xi_b, generator=tag)


def ind6_witnesses(v: Pattern) -> Ind6Witness:
    """
    Nove palavras ξ_{q₁q₂} com Z(ξ_{qc}) = {ξ_{qa}, ξ_{qb}, ξ_{qc}},
    a identidade análoga para as reversas de ξ_{cq} e g_q(ξ_{qa}) = ξ_{qb}.

    Raises:
        BadPatternError: |v| < 2 ou sinais das pontas não repetidos.
        WitnessError: alguma pós-condição falhou.
    """
    text = pattern_to_text(v)
    if len(v) < 2:
        raise BadPatternError(text, "comprimento mínimo 2")
    if v[0] != v[1] or v[-1] != v[-2]:
        raise BadPatternError(text, "os dois primeiros e os dois últimos sinais devem coincidir")

    eta = _fill_by_neighbor(v[1:-1], look_ahead=False)
    heads = [((q if v[0] is Sign.PLUS else invert_letter(q)),) + eta for q in (A, B, C)]
    table = tuple(tuple(_append(head, q2, v[-1]) for q2 in (A, B, C)) for head in heads)

    g = GeneratorTag.ALPHA if v[0] is Sign.PLUS else GeneratorTag.BETA
    h = GeneratorTag.BETA if g is GeneratorTag.ALPHA else GeneratorTag.ALPHA
    generators = (g, g, h)

    for row in table:
        for word in row:
            _check(text, "ind6", is_freely_irreducible(word), "palavra redutível")
            _check(text, "ind6", pattern_of(word) == v, "padrão divergente")
    for q in range(3):
        _check(text, "ind6", z_set(table[q][2]) == set(table[q]), "Z(ξ_qc) incompleto")
        reversed_column = {reverse_word(table[p][q]) for p in range(3)}
        _check(
            text,
            "ind6",
            z_set(reverse_word(table[2][q])) == reversed_column,
            "Z das reversas incompleto",
        )
        _check(
            text,
            "ind6",
            tag_generator(generators[q])(table[q][0]) == table[q][1],
            "g_q(ξ_qa) ≠ ξ_qb",
        )
    return Ind6Witness(table=table, generators=generators)


def _check(pattern: str, construction: str, condition: bool, reason: str) -> None:
    if not condition:
        logger.error("Pós-condição violada", construction=construction, pattern=pattern)
        raise WitnessError(construction, f"{reason} (padrão {pattern})")


def chi_values(v: Pattern) -> set[int]:
    """Valores de χ atingidos na classe irredutível de v."""
    return {chi(xi) for xi in irreducible_class(v)}
