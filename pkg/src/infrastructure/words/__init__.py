"""
Codec textual de palavras (Q±, estados e vértices da árvore).
"""

from src.infrastructure.words.codec import (
    format_group_word,
    format_letters,
    format_symbol_word,
    parse_group_word,
    parse_letters,
    parse_symbol_word,
)

__all__ = [
    "format_group_word",
    "format_letters",
    "format_symbol_word",
    "parse_group_word",
    "parse_letters",
    "parse_symbol_word",
]
