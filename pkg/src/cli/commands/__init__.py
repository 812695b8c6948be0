"""
Comandos da linha de comando.
"""

from src.cli.commands import automata, verify, words

COMMAND_MODULES = (automata, words, verify)

__all__ = ["COMMAND_MODULES"]
