"""
Verificações executáveis dos lemas sobre A, B, D e E.

Cada verificação percorre exaustivamente as palavras (ou padrões) até
um comprimento e devolve um LemmaResult com o número de casos checados
e, em caso de falha, o primeiro contraexemplo.
"""

import itertools
from collections.abc import Callable, Iterator, Sequence

from src.core.exceptions import WitnessError
from src.core.logging import get_logger
from src.domain.entities import QPM_SIZE, InitialRef, LemmaResult, Permutation, WClass
from src.domain.entities.words import A, A_INV, B, B_INV, pattern_to_text
from src.infrastructure.words import format_group_word
from src.services.aleshin import (
    ALPHA,
    BETA,
    GAMMA,
    base_permutation,
    build_b,
    build_dual_d,
    chi,
    d_generator,
    e_generator,
    lift_permutation,
    pattern_of,
    reverse_word,
    w_class,
)
from src.services.automata import all_words, generator_maps, inverse_automaton
from src.services.freeness import first_level_action
from src.services.orbits import (
    all_patterns,
    chi_values,
    e_generators,
    ind2_witnesses,
    ind5_witnesses,
    ind6_witnesses,
    irreducible_class,
    irreducible_class_size,
    orbit_partition,
    smallest_irreducible,
    word_orbit,
)

logger = get_logger(__name__)

LemmaCheck = Callable[[int], LemmaResult]


def _words_up_to(max_len: int) -> Iterator[tuple[int, ...]]:
    for n in range(max_len + 1):
        yield from all_words(QPM_SIZE, n)


class _Tally:
    """Conta casos e guarda o primeiro contraexemplo."""

    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.failure = ""

    def expect(self, condition: bool, describe: Callable[[], str]) -> None:
        self.checked += 1
        if not condition and not self.failure:
            self.failure = describe()

    def result(self) -> LemmaResult:
        return LemmaResult(
            name=self.name,
            passed=not self.failure,
            checked=self.checked,
            detail=self.failure,
        )


def _base_permutations() -> list[Permutation]:
    return [Permutation(p) for p in itertools.permutations(range(3))]


# ──────────────────────────────────────────────
#  Autômatos E e D
# ──────────────────────────────────────────────

def check_free1(max_len: int) -> LemmaResult:
    """π_{τ₁τ₂} = π_{τ₁}π_{τ₂} e π_{τ⁻¹} = π_τ⁻¹ para os 36 pares."""
    tally = _Tally("free1")
    perms = _base_permutations()
    words = list(_words_up_to(max_len))
    for t1, t2 in itertools.product(perms, repeat=2):
        composed = lift_permutation(t1.compose(t2))
        p1, p2 = lift_permutation(t1), lift_permutation(t2)
        inv2 = lift_permutation(t2.inverse())
        for w in words:
            tally.expect(
                composed(w) == p1(p2(w)) and inv2(p2(w)) == w,
                lambda: f"τ₁={t1.mapping} τ₂={t2.mapping} ξ={format_group_word(w)}",
            )
    return tally.result()


def check_free2(max_len: int) -> LemmaResult:
    """E_α², E_β², E_γ² = 1; E_αE_β = E_βE_α = π_(ab); E_γ = π_(bc)."""
    tally = _Tally("free2")
    e_a, e_b, e_g = e_generator(ALPHA), e_generator(BETA), e_generator(GAMMA)
    pi_ab = lift_permutation(base_permutation("(a b)"))
    pi_bc = lift_permutation(base_permutation("(b c)"))
    for w in _words_up_to(max_len):
        swapped = pi_ab(w)
        tally.expect(
            e_a(e_a(w)) == w
            and e_b(e_b(w)) == w
            and e_g(e_g(w)) == w
            and e_a(e_b(w)) == swapped
            and e_b(e_a(w)) == swapped
            and e_g(w) == pi_bc(w),
            lambda: f"ξ={format_group_word(w)}",
        )
    return tally.result()


def check_free3(max_len: int) -> LemmaResult:
    """
    D_0 = π_(ac)E_α = π_(abc)E_β, D_1 = π_(abc)E_α = π_(ac)E_β (E aplicado
    primeiro), D_0D_1⁻¹ = E_γ e D_0⁻¹D_1 = π_(ab).
    """
    tally = _Tally("free3")
    e_a, e_b, e_g = e_generator(ALPHA), e_generator(BETA), e_generator(GAMMA)
    d0, d1 = d_generator(0), d_generator(1)
    d_inv = inverse_automaton(build_dual_d())
    d0_inv, d1_inv = InitialRef(d_inv, 0), InitialRef(d_inv, 1)
    pi_ac = lift_permutation(base_permutation("(a c)"))
    pi_abc = lift_permutation(base_permutation("(a b c)"))
    pi_ab = lift_permutation(base_permutation("(a b)"))
    for w in _words_up_to(max_len):
        ea, eb = e_a(w), e_b(w)
        tally.expect(
            d0(w) == pi_ac(ea) == pi_abc(eb)
            and d1(w) == pi_abc(ea) == pi_ac(eb)
            and d0(d1_inv(w)) == e_g(w)
            and d0_inv(d1(w)) == pi_ab(w),
            lambda: f"ξ={format_group_word(w)}",
        )
    return tally.result()


def check_free4_orbit(max_len: int) -> LemmaResult:
    """Partições em órbitas sob G(D) e G(E) coincidem em cada comprimento."""
    tally = _Tally("free4-orbit")
    d_maps = generator_maps([d_generator(0), d_generator(1)], "group")
    e_maps = generator_maps(e_generators(), "group")
    for n in range(max_len + 1):
        same = orbit_partition(d_maps, QPM_SIZE, n) == orbit_partition(e_maps, QPM_SIZE, n)
        tally.expect(same, lambda: f"comprimento {n}")
    return tally.result()


# ──────────────────────────────────────────────
#  Padrões e órbitas
# ──────────────────────────────────────────────

def check_ind1(max_len: int) -> LemmaResult:
    """B_ξ age trivialmente no primeiro nível se e só se χ(ξ) = +1."""
    tally = _Tally("ind1")
    b = build_b()
    for xi in _words_up_to(max_len):
        trivial = first_level_action(b, xi).is_identity()
        tally.expect(trivial == (chi(xi) == 1), lambda: f"ξ={format_group_word(xi)}")
    return tally.result()


def check_ind2(max_len: int) -> LemmaResult:
    """Testemunhas de χ opostos e os dois valores de χ em cada classe não vazia."""
    tally = _Tally("ind2")
    for n in range(1, max_len + 1):
        for v in all_patterns(n):
            xi1, xi2 = ind2_witnesses(v)
            tally.expect(
                chi(xi1) == -chi(xi2)
                and pattern_of(xi1) == pattern_of(xi2) == v
                and chi_values(v) == {1, -1},
                lambda: f"padrão {pattern_to_text(v)}",
            )
    return tally.result()


def check_ind3(max_len: int) -> LemmaResult:
    """A G(E)-órbita do menor representante é a classe irredutível inteira."""
    tally = _Tally("ind3")
    gens = e_generators()
    for n in range(1, max_len + 1):
        for v in all_patterns(n):
            members = word_orbit(gens, smallest_irreducible(v)).members
            tally.expect(
                members == irreducible_class(v) and len(members) == irreducible_class_size(v),
                lambda: f"padrão {pattern_to_text(v)}",
            )
    return tally.result()


def check_ind4(max_len: int) -> LemmaResult:
    """Mesma órbita de ξ₁, ξ₂ equivale a mesma órbita das reversas."""
    tally = _Tally("ind4")
    maps = generator_maps(e_generators(), "group")
    for n in range(max_len + 1):
        partition = orbit_partition(maps, QPM_SIZE, n)
        reversed_blocks = frozenset(
            frozenset(reverse_word(w) for w in block) for block in partition
        )
        tally.expect(reversed_blocks == partition, lambda: f"comprimento {n}")
    return tally.result()


def _witness_check(name: str, max_len: int, admissible, build) -> LemmaResult:
    tally = _Tally(name)
    for n in range(2, max_len + 1):
        for v in all_patterns(n):
            if not admissible(v):
                continue
            try:
                build(v)
                ok, reason = True, ""
            except WitnessError as exc:
                ok, reason = False, exc.message
            tally.expect(ok, lambda: reason)
    return tally.result()


def check_ind5(max_len: int) -> LemmaResult:
    return _witness_check("ind5", max_len, lambda v: v[-1] != v[-2], ind5_witnesses)


def check_ind6(max_len: int) -> LemmaResult:
    return _witness_check(
        "ind6", max_len, lambda v: v[0] == v[1] and v[-1] == v[-2], ind6_witnesses
    )


# Regras de troca ao anexar uma letra: classe → (gerador, par trocado)
_SWAP_RULES: dict[WClass, tuple[int, tuple[int, int]]] = {
    WClass.PLUS_PLUS: (ALPHA, (A, B)),
    WClass.PLUS_MINUS: (ALPHA, (A_INV, B_INV)),
    WClass.MINUS_PLUS: (BETA, (A, B)),
    WClass.MINUS_MINUS: (BETA, (A_INV, B_INV)),
}


def check_indextra(max_len: int) -> LemmaResult:
    """
    E_α fixa W++ ∪ W+-, E_β fixa W-+ ∪ W--, e as regras de troca ao
    anexar a/b ou a⁻¹/b⁻¹.
    """
    tally = _Tally("indextra")
    gens = {ALPHA: e_generator(ALPHA), BETA: e_generator(BETA)}
    fixers = {
        WClass.PLUS_PLUS: ALPHA,
        WClass.PLUS_MINUS: ALPHA,
        WClass.MINUS_PLUS: BETA,
        WClass.MINUS_MINUS: BETA,
    }
    for xi in _words_up_to(max_len):
        for cls in w_class(xi):
            g = gens[fixers[cls]]
            tally.expect(g(xi) == xi, lambda: f"{cls.value} não fixado: {format_group_word(xi)}")
            state, (x, y) = _SWAP_RULES[cls]
            swap = gens[state]
            tally.expect(
                swap(xi + (x,)) == xi + (y,) and swap(xi + (y,)) == xi + (x,),
                lambda: f"troca {cls.value}: {format_group_word(xi)}",
            )
    return tally.result()


LEMMAS: dict[str, LemmaCheck] = {
    "free1": check_free1,
    "free2": check_free2,
    "free3": check_free3,
    "free4-orbit": check_free4_orbit,
    "ind1": check_ind1,
    "ind2": check_ind2,
    "ind3": check_ind3,
    "ind4": check_ind4,
    "ind5": check_ind5,
    "ind6": check_ind6,
    "indextra": check_indextra,
}


def run_lemma_suite(max_len: int, names: Sequence[str] | None = None) -> list[LemmaResult]:
    """Executa os lemas pedidos (todos, por padrão) na ordem do registro."""
    selected = list(names) if names else list(LEMMAS)
    unknown = [n for n in selected if n not in LEMMAS]
    if unknown:
        raise KeyError(f"Lemas desconhecidos: {', '.join(unknown)}")

    results = []
    for name in LEMMAS:
        if name not in selected:
            continue
        result = LEMMAS[name](max_len)
        log = logger.info if result.passed else logger.error
        log("Lema verificado", lemma=name, passed=result.passed, checked=result.checked)
        results.append(result)
    return results
