"""
Entidade Automaton - autômato de Mealy (transdutor letra a letra).

Estados e letras são guardados como índices inteiros densos com uma
tabela de nomes; palavras são tuplas de índices.
"""

from dataclasses import dataclass, field

from src.core.exceptions import (
    DuplicateEntryError,
    EmptyAlphabetError,
    EmptyStateSetError,
    IndexOutOfRangeError,
    LetterOutOfRangeError,
    MissingEntryError,
    SurplusEntryError,
    UnknownSymbolError,
)

# Vértice da árvore X* (índices de letras)
TreeWord = tuple[int, ...]

# Palavra sobre os estados Q* (índices de estados)
StateWord = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Automaton:
    """
    Quádrupla (Q, X, φ, ψ).

    `transition[q][x]` é φ(q,x) e `output[q][x]` é ψ(q,x), ambos como
    índices. As tabelas são totais sobre Q × X.
    """

    state_names: tuple[str, ...]
    alphabet_names: tuple[str, ...]
    transition: tuple[tuple[int, ...], ...]
    output: tuple[tuple[int, ...], ...]
    _state_lookup: dict[str, int] = field(
        init=False, repr=False, compare=False, hash=False, default_factory=dict
    )
    _letter_lookup: dict[str, int] = field(
        init=False, repr=False, compare=False, hash=False, default_factory=dict
    )

    def __post_init__(self) -> None:
        """Validação estrutural após inicialização."""
        if not self.alphabet_names:
            raise EmptyAlphabetError()
        if not self.state_names:
            raise EmptyStateSetError()

        for names, lookup, kind in (
            (self.state_names, self._state_lookup, "state"),
            (self.alphabet_names, self._letter_lookup, "letter"),
        ):
            for index, name in enumerate(names):
                if name in lookup:
                    raise DuplicateEntryError(f"Símbolo duplicado ({kind}): {name}")
                lookup[name] = index

        n_states, n_letters = len(self.state_names), len(self.alphabet_names)
        for table, bound, kind in (
            (self.transition, n_states, "state"),
            (self.output, n_letters, "letter"),
        ):
            if len(table) > n_states:
                raise SurplusEntryError(len(table) - n_states)
            if len(table) < n_states:
                raise MissingEntryError(self.state_names[len(table)], "*")
            for q, row in enumerate(table):
                if len(row) > n_letters:
                    raise SurplusEntryError(len(row) - n_letters, state=self.state_names[q])
                if len(row) < n_letters:
                    raise MissingEntryError(self.state_names[q], self.alphabet_names[len(row)])
                for value in row:
                    if not 0 <= value < bound:
                        raise IndexOutOfRangeError(value, bound, kind=kind)

    @property
    def num_states(self) -> int:
        return len(self.state_names)

    @property
    def num_letters(self) -> int:
        return len(self.alphabet_names)

    def state_index(self, name: str) -> int:
        """Índice do estado `name`."""
        try:
            return self._state_lookup[name]
        except KeyError:
            raise UnknownSymbolError(name, kind="state") from None

    def letter_index(self, name: str) -> int:
        """Índice da letra `name`."""
        try:
            return self._letter_lookup[name]
        except KeyError:
            raise UnknownSymbolError(name, kind="letter") from None

    def check_tree_word(self, w: TreeWord) -> None:
        """Garante que todas as letras de `w` estão no alfabeto."""
        bound = self.num_letters
        for x in w:
            if not 0 <= x < bound:
                raise LetterOutOfRangeError(x, bound)

    def check_state_word(self, xi: StateWord) -> None:
        """Garante que todos os estados de `xi` existem."""
        bound = self.num_states
        for q in xi:
            if not 0 <= q < bound:
                raise IndexOutOfRangeError(q, bound, kind="state")


@dataclass(frozen=True, slots=True)
class InitialRef:
    """Autômato inicial A_q, representado pelo par (autômato, q)."""

    automaton: Automaton
    state: int

    def __post_init__(self) -> None:
        self.automaton.check_state_word((self.state,))

    @property
    def label(self) -> str:
        return self.automaton.state_names[self.state]

    def __call__(self, word: TreeWord) -> TreeWord:
        """Aplica ψ*(q, ·) sem revalidar a palavra (caminho quente das órbitas)."""
        transition = self.automaton.transition
        output = self.automaton.output
        q = self.state
        out = []
        for x in word:
            out.append(output[q][x])
            q = transition[q][x]
        return tuple(out)


@dataclass(frozen=True)
class RawTables:
    """
    Tabelas candidatas, ainda não validadas.

    `entries` são quádruplas (estado, letra, próximo estado, letra de saída)
    por nome, como nas arestas `x|y` do diagrama de Moore.
    """

    state_names: tuple[str, ...]
    alphabet_names: tuple[str, ...]
    entries: tuple[tuple[str, str, str, str], ...]
