"""
Formato textual de diagramas de Moore (parser e serializador).
"""

from src.infrastructure.moore.document import (
    MooreDocument,
    parse,
    read_document,
    serialize,
)

__all__ = [
    "MooreDocument",
    "parse",
    "read_document",
    "serialize",
]
