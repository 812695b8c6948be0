"""
Core module.
"""

from src.core.config import Settings, get_settings
from src.core.exceptions import (
    AutomataError,
    FormatError,
    NotInvertibleError,
    TableError,
    WordError,
)

__all__ = [
    "Settings",
    "get_settings",
    "AutomataError",
    "TableError",
    "FormatError",
    "WordError",
    "NotInvertibleError",
]
