"""
Álgebra genérica de autômatos de Mealy.

Construção, validação, transdução, invertibilidade e os autômatos
derivados (inverso, reverso, dual, união disjunta), sem nada específico
do autômato de Aleshin. Todas as funções são puras sobre valores imutáveis.
"""

import itertools
from collections.abc import Iterable, Iterator, Mapping, Sequence
from functools import lru_cache
from typing import Literal

from src.core.exceptions import (
    AlphabetMismatchError,
    AutomatonMismatchError,
    DuplicateEntryError,
    MissingEntryError,
    NotInvertibleError,
    NotReversibleError,
    StateClashError,
    UnknownSymbolError,
)
from src.domain.entities import Automaton, InitialRef, RawTables, StateWord, TreeWord
from src.domain.interfaces import WordTransformation

OrbitMode = Literal["semigroup", "group"]


# ──────────────────────────────────────────────
#  Construção e validação
# ──────────────────────────────────────────────

def validate(raw: RawTables) -> Automaton:
    """
    Valida tabelas candidatas e constrói o autômato.

    Raises:
        EmptyAlphabetError, EmptyStateSetError: conjuntos vazios.
        DuplicateEntryError: par (estado, letra) ou nome repetido.
        UnknownSymbolError: símbolo fora das declarações.
        MissingEntryError: par (estado, letra) sem entrada.
    """
    # Nomes duplicados e conjuntos vazios são checados pela entidade
    draft = Automaton(
        state_names=tuple(raw.state_names),
        alphabet_names=tuple(raw.alphabet_names),
        transition=tuple((0,) * len(raw.alphabet_names) for _ in raw.state_names),
        output=tuple((0,) * len(raw.alphabet_names) for _ in raw.state_names),
    )

    n_states, n_letters = draft.num_states, draft.num_letters
    transition: list[list[int | None]] = [[None] * n_letters for _ in range(n_states)]
    output: list[list[int | None]] = [[None] * n_letters for _ in range(n_states)]

    for state, letter, next_state, out_letter in raw.entries:
        q = draft.state_index(state)
        x = draft.letter_index(letter)
        if transition[q][x] is not None:
            raise DuplicateEntryError(
                f"Entrada duplicada para o par ({state}, {letter})", state=state, letter=letter
            )
        transition[q][x] = draft.state_index(next_state)
        output[q][x] = draft.letter_index(out_letter)

    for q in range(n_states):
        for x in range(n_letters):
            if transition[q][x] is None:
                raise MissingEntryError(draft.state_names[q], draft.alphabet_names[x])

    return Automaton(
        state_names=draft.state_names,
        alphabet_names=draft.alphabet_names,
        transition=tuple(tuple(row) for row in transition),  # type: ignore[arg-type]
        output=tuple(tuple(row) for row in output),  # type: ignore[arg-type]
    )


def all_words(alphabet_size: int, length: int) -> Iterator[tuple[int, ...]]:
    """Todas as palavras de um comprimento, em ordem lexicográfica."""
    return itertools.product(range(alphabet_size), repeat=length)


# ──────────────────────────────────────────────
#  Ação na árvore
# ──────────────────────────────────────────────

def transduce(init: InitialRef, w: TreeWord) -> TreeWord:
    """
    ψ*(q, w): saída do autômato iniciado em q lendo w.

    Raises:
        LetterOutOfRangeError: letra fora do alfabeto.
    """
    init.automaton.check_tree_word(w)
    return init(w)


def act_word(a: Automaton, xi: StateWord, w: TreeWord) -> TreeWord:
    """
    A_ξ(w) com ξ = q₁…qₙ: aplica A_{q₁} primeiro (ação à direita de Q*).

    A_ε é a identidade e A_{ξ₁ξ₂}(w) = A_{ξ₂}(A_{ξ₁}(w)).
    """
    a.check_state_word(xi)
    a.check_tree_word(w)
    return _act(a.transition, a.output, xi, w)


def _act(
    transition: tuple[tuple[int, ...], ...],
    output: tuple[tuple[int, ...], ...],
    xi: Sequence[int],
    w: Sequence[int],
) -> tuple[int, ...]:
    word = tuple(w)
    for q0 in xi:
        q = q0
        out = []
        for x in word:
            out.append(output[q][x])
            q = transition[q][x]
        word = tuple(out)
    return word


def section_word(a: Automaton, xi: StateWord, w: TreeWord) -> StateWord:
    """
    D_w(ξ): seção de A_ξ no vértice w, obtida transduzindo ξ pelo dual.

    Satisfaz A_ξ(wu) = A_ξ(w) A_{D_w(ξ)}(u).
    """
    a.check_state_word(xi)
    a.check_tree_word(w)
    dual = dual_automaton(a)
    return _act(dual.transition, dual.output, w, xi)


# ──────────────────────────────────────────────
#  Autômatos derivados
# ──────────────────────────────────────────────

def is_invertible(a: Automaton) -> bool:
    """Verdadeiro se x ↦ ψ(q,x) é bijeção para todo estado q."""
    n = a.num_letters
    return all(len(set(row)) == n for row in a.output)


@lru_cache(maxsize=128)
def inverse_automaton(a: Automaton) -> Automaton:
    """
    Troca os campos de entrada e saída de todas as arestas.

    Raises:
        NotInvertibleError: alguma linha de saída não é bijetiva.
    """
    n = a.num_letters
    transition: list[list[int]] = []
    output: list[list[int]] = []
    for q, row in enumerate(a.output):
        if len(set(row)) != n:
            raise NotInvertibleError(a.state_names[q])
        t_row = [0] * n
        o_row = [0] * n
        for x, y in enumerate(row):
            t_row[y] = a.transition[q][x]
            o_row[y] = x
        transition.append(t_row)
        output.append(o_row)
    return Automaton(
        state_names=a.state_names,
        alphabet_names=a.alphabet_names,
        transition=tuple(map(tuple, transition)),
        output=tuple(map(tuple, output)),
    )


def reverse_automaton(a: Automaton) -> Automaton:
    """
    Inverte o sentido de todas as arestas do diagrama de Moore.

    A aresta q --x|y--> p vira p --x|y--> q.

    Raises:
        NotReversibleError: alguma coluna q ↦ φ(q,x) não é bijetiva.
    """
    n_states, n_letters = a.num_states, a.num_letters
    transition = [[0] * n_letters for _ in range(n_states)]
    output = [[0] * n_letters for _ in range(n_states)]
    for x in range(n_letters):
        column = [a.transition[q][x] for q in range(n_states)]
        if len(set(column)) != n_states:
            raise NotReversibleError(a.alphabet_names[x])
        for q, p in enumerate(column):
            transition[p][x] = q
            output[p][x] = a.output[q][x]
    return Automaton(
        state_names=a.state_names,
        alphabet_names=a.alphabet_names,
        transition=tuple(map(tuple, transition)),
        output=tuple(map(tuple, output)),
    )


@lru_cache(maxsize=128)
def dual_automaton(a: Automaton) -> Automaton:
    """
    D = (X, Q, φ̃, ψ̃) com φ̃(x,q) = ψ(q,x) e ψ̃(x,q) = φ(q,x).

    Sempre definido; o dual do dual é o próprio autômato.
    """
    n_states, n_letters = a.num_states, a.num_letters
    return Automaton(
        state_names=a.alphabet_names,
        alphabet_names=a.state_names,
        transition=tuple(
            tuple(a.output[q][x] for q in range(n_states)) for x in range(n_letters)
        ),
        output=tuple(
            tuple(a.transition[q][x] for q in range(n_states)) for x in range(n_letters)
        ),
    )


def disjoint_union(a1: Automaton, a2: Automaton) -> Automaton:
    """
    União disjunta: estados de a1 seguidos dos de a2, mesmo alfabeto.

    Raises:
        AlphabetMismatchError: alfabetos diferentes.
        StateClashError: nomes de estados em comum.
    """
    if a1.alphabet_names != a2.alphabet_names:
        raise AlphabetMismatchError(a1.alphabet_names, a2.alphabet_names)
    shared = sorted(set(a1.state_names) & set(a2.state_names))
    if shared:
        raise StateClashError(shared)
    offset = a1.num_states
    return Automaton(
        state_names=a1.state_names + a2.state_names,
        alphabet_names=a1.alphabet_names,
        transition=a1.transition
        + tuple(tuple(p + offset for p in row) for row in a2.transition),
        output=a1.output + a2.output,
    )


def rename_states(a: Automaton, mapping: Mapping[str, str]) -> Automaton:
    """Renomeia estados; estados fora do mapeamento mantêm o nome."""
    for name in mapping:
        if name not in a.state_names:
            raise UnknownSymbolError(name, kind="state")
    names = tuple(mapping.get(name, name) for name in a.state_names)
    if len(set(names)) != len(names):
        raise DuplicateEntryError(f"Renomeação gera nomes repetidos: {names}")
    return Automaton(
        state_names=names,
        alphabet_names=a.alphabet_names,
        transition=a.transition,
        output=a.output,
    )


# ──────────────────────────────────────────────
#  Órbitas
# ──────────────────────────────────────────────

def orbit_closure(
    maps: Sequence[WordTransformation], seed: tuple[int, ...]
) -> frozenset[tuple[int, ...]]:
    """
    Fecho por BFS de {seed} sob as transformações dadas.

    A fronteira é expandida em ordem lexicográfica e os geradores na
    ordem recebida, o que torna a exploração determinística.
    """
    visited = {seed}
    frontier = [seed]
    while frontier:
        discovered = []
        for word in frontier:
            for g in maps:
                image = g(word)
                if image not in visited:
                    visited.add(image)
                    discovered.append(image)
        frontier = sorted(discovered)
    return frozenset(visited)


def generator_maps(gens: Sequence[InitialRef], mode: OrbitMode) -> list[InitialRef]:
    """
    Geradores efetivos: os próprios, mais os inversos no modo grupo.

    Raises:
        AutomatonMismatchError: geradores de autômatos diferentes.
        NotInvertibleError: modo grupo sobre autômato não invertível.
    """
    if not gens:
        return []
    automaton = gens[0].automaton
    if any(g.automaton != automaton for g in gens[1:]):
        raise AutomatonMismatchError()
    maps = list(gens)
    if mode == "group":
        inverse = inverse_automaton(automaton)
        maps.extend(InitialRef(inverse, g.state) for g in gens)
    # Inversos que coincidem com os geradores (autômatos auto-inversos) caem aqui
    return list(dict.fromkeys(maps))


def tree_orbit(
    gens: Sequence[InitialRef], w: TreeWord, mode: OrbitMode = "semigroup"
) -> frozenset[TreeWord]:
    """
    Órbita de w sob as transformações iniciais dadas.

    Para autômatos invertíveis os modos semigrupo e grupo coincidem.
    """
    maps = generator_maps(gens, mode)
    if gens:
        gens[0].automaton.check_tree_word(w)
    return orbit_closure(maps, tuple(w))


def states_to_refs(a: Automaton, names: Iterable[str]) -> list[InitialRef]:
    """Resolve nomes de estados em autômatos iniciais."""
    return [InitialRef(a, a.state_index(name)) for name in names]
