"""
Camada de serviços.

Contém a álgebra de autômatos, o aparato de Aleshin, o motor de órbitas,
o verificador de liberdade e a suíte de lemas.
"""

from src.services.automata import (
    act_word,
    disjoint_union,
    dual_automaton,
    inverse_automaton,
    is_invertible,
    reverse_automaton,
    section_word,
    transduce,
    validate,
)
from src.services.aleshin import build_aleshin, build_b, build_dual_d, build_e, chi
from src.services.orbits import irreducible_class, word_orbit
from src.services.freeness import (
    FreenessService,
    first_level_action,
    is_identity,
    min_nontrivial_level,
    verify_freeness,
)
from src.services.lemma_suite import LEMMAS, run_lemma_suite

__all__ = [
    "act_word",
    "disjoint_union",
    "dual_automaton",
    "inverse_automaton",
    "is_invertible",
    "reverse_automaton",
    "section_word",
    "transduce",
    "validate",
    "build_aleshin",
    "build_b",
    "build_dual_d",
    "build_e",
    "chi",
    "irreducible_class",
    "word_orbit",
    "FreenessService",
    "first_level_action",
    "is_identity",
    "min_nontrivial_level",
    "verify_freeness",
    "LEMMAS",
    "run_lemma_suite",
]
