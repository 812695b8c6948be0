"""
Entidade OrbitSet - órbita de uma palavra sob um conjunto de geradores.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class OrbitSet:
    """Membros de uma órbita (todos do mesmo comprimento)."""

    members: frozenset[tuple[int, ...]]
    generator_tag: str
    length: int

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, word: object) -> bool:
        return word in self.members

    def sorted_members(self) -> list[tuple[int, ...]]:
        """Membros em ordem lexicográfica (saída canônica)."""
        return sorted(self.members)
