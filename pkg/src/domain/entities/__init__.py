"""
Entidades do domínio.
"""

from src.domain.entities.automaton import (
    Automaton,
    InitialRef,
    RawTables,
    StateWord,
    TreeWord,
)
from src.domain.entities.certificate import (
    LemmaResult,
    SweepReport,
    SweepRow,
    TrivialityCertificate,
    Verdict,
)
from src.domain.entities.orbit import OrbitSet
from src.domain.entities.permutation import Permutation
from src.domain.entities.words import (
    QPM_NAMES,
    QPM_SIZE,
    GeneratorTag,
    GroupWordQ,
    Pattern,
    Sign,
    SignedSymbol,
    WClass,
)

__all__ = [
    # Automaton
    "Automaton",
    "InitialRef",
    "RawTables",
    "StateWord",
    "TreeWord",
    # Words
    "GroupWordQ",
    "Pattern",
    "Sign",
    "SignedSymbol",
    "WClass",
    "GeneratorTag",
    "QPM_NAMES",
    "QPM_SIZE",
    # Permutation
    "Permutation",
    # Orbits
    "OrbitSet",
    # Certificates
    "TrivialityCertificate",
    "Verdict",
    "SweepRow",
    "SweepReport",
    "LemmaResult",
]
