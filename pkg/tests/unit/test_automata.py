import random
import unittest

import pytest

from src.core.exceptions import (
    AlphabetMismatchError,
    AutomatonMismatchError,
    DuplicateEntryError,
    EmptyAlphabetError,
    LetterOutOfRangeError,
    MissingEntryError,
    NotInvertibleError,
    NotReversibleError,
    StateClashError,
    SurplusEntryError,
    UnknownSymbolError,
)
from src.domain.entities import Automaton, InitialRef, RawTables
from src.domain.entities.words import A, A_INV, B, C
from src.services.aleshin import ALPHA, BETA, GAMMA, build_aleshin, build_b, build_e
from src.services.automata import (
    act_word,
    all_words,
    disjoint_union,
    dual_automaton,
    generator_maps,
    inverse_automaton,
    is_invertible,
    rename_states,
    reverse_automaton,
    section_word,
    states_to_refs,
    transduce,
    tree_orbit,
    validate,
)
from src.services.orbits import orbit_partition

ALESHIN_ENTRIES = (
    ("a", "0", "c", "1"),
    ("a", "1", "b", "0"),
    ("b", "0", "b", "1"),
    ("b", "1", "c", "0"),
    ("c", "0", "a", "0"),
    ("c", "1", "a", "1"),
)


def letters(text: str) -> tuple[int, ...]:
    return tuple(int(ch) for ch in text)


def constant_zero() -> Automaton:
    return Automaton(("s",), ("0", "1"), ((0, 0),), ((0, 0),))


def ternary_identity() -> Automaton:
    return Automaton(("s",), ("0", "1", "2"), ((0, 0, 0),), ((0, 1, 2),))


class ValidateTestCase(unittest.TestCase):
    def test_aleshin_tables(self):
        a = validate(RawTables(("a", "b", "c"), ("0", "1"), ALESHIN_ENTRIES))
        self.assertEqual(a.num_states, 3)
        self.assertEqual(a.num_letters, 2)
        self.assertEqual(a, build_aleshin())

    def test_missing_pair(self):
        with self.assertRaises(MissingEntryError) as ctx:
            validate(RawTables(("a", "b", "c"), ("0", "1"), ALESHIN_ENTRIES[:-1]))
        self.assertEqual(ctx.exception.details["state"], "c")
        self.assertEqual(ctx.exception.details["letter"], "1")

    def test_duplicate_pair(self):
        entries = ALESHIN_ENTRIES + (("a", "0", "a", "0"),)
        with self.assertRaises(DuplicateEntryError) as ctx:
            validate(RawTables(("a", "b", "c"), ("0", "1"), entries))
        self.assertEqual(ctx.exception.details["state"], "a")

    def test_unknown_symbol(self):
        entries = ALESHIN_ENTRIES[:-1] + (("c", "1", "z", "1"),)
        with self.assertRaises(UnknownSymbolError):
            validate(RawTables(("a", "b", "c"), ("0", "1"), entries))

    def test_empty_alphabet(self):
        with self.assertRaises(EmptyAlphabetError):
            validate(RawTables(("a",), (), ()))

    def test_table_shape(self):
        with self.assertRaises(SurplusEntryError) as ctx:
            Automaton(("s",), ("0",), ((0, 0),), ((0,),))
        self.assertEqual(ctx.exception.details, {"state": "s", "surplus": 1})
        with self.assertRaises(SurplusEntryError) as ctx:
            Automaton(("s",), ("0",), ((0,), (0,)), ((0,),))
        self.assertEqual(ctx.exception.details["surplus"], 1)
        self.assertNotIn("state", ctx.exception.details)
        with self.assertRaises(MissingEntryError) as ctx:
            Automaton(("s",), ("0", "1"), ((0,),), ((0, 1),))
        self.assertEqual(ctx.exception.details["letter"], "1")


class TransduceTestCase(unittest.TestCase):
    def setUp(self):
        self.a = build_aleshin()
        self.refs = dict(zip("abc", states_to_refs(self.a, ["a", "b", "c"])))

    def test_known_traces(self):
        self.assertEqual(transduce(self.refs["a"], letters("0")), letters("1"))
        self.assertEqual(transduce(self.refs["a"], letters("110")), letters("000"))
        self.assertEqual(transduce(self.refs["c"], letters("01")), letters("00"))
        self.assertEqual(transduce(self.refs["c"], letters("00")), letters("01"))
        self.assertEqual(transduce(self.refs["c"], letters("1")), letters("1"))

    def test_empty_word(self):
        for ref in self.refs.values():
            self.assertEqual(transduce(ref, ()), ())

    def test_letter_out_of_range(self):
        with self.assertRaises(LetterOutOfRangeError):
            transduce(self.refs["a"], (0, 2))

    def test_length_and_prefix_preserved(self):
        rng = random.Random(7)
        for _ in range(200):
            w = tuple(rng.randrange(2) for _ in range(rng.randrange(12)))
            tail = tuple(rng.randrange(2) for _ in range(rng.randrange(1, 6)))
            for ref in self.refs.values():
                image = transduce(ref, w)
                self.assertEqual(len(image), len(w))
                self.assertEqual(transduce(ref, w + tail)[: len(w)], image)


class ActWordTestCase(unittest.TestCase):
    def setUp(self):
        self.b = build_b()

    def test_first_letter_applies_first(self):
        self.assertEqual(act_word(self.b, (A, B), letters("00")), letters("00"))
        self.assertEqual(act_word(self.b, (A, B), letters("000")), letters("000"))
        self.assertEqual(act_word(self.b, (B, A), letters("000")), letters("001"))

    def test_empty_state_word(self):
        self.assertEqual(act_word(self.b, (), letters("0110")), letters("0110"))

    def test_generator_times_inverse(self):
        for n in range(9):
            for w in all_words(2, n):
                self.assertEqual(act_word(self.b, (A, A_INV), w), w)


class InverseTestCase(unittest.TestCase):
    def test_aleshin_is_invertible(self):
        self.assertTrue(is_invertible(build_aleshin()))
        self.assertTrue(is_invertible(build_e()))
        self.assertFalse(is_invertible(constant_zero()))

    def test_inverse_of_a(self):
        inverse = inverse_automaton(build_aleshin())
        self.assertEqual(transduce(InitialRef(inverse, 0), letters("1")), letters("0"))

    def test_e_is_its_own_inverse(self):
        self.assertEqual(inverse_automaton(build_e()), build_e())

    def test_not_invertible(self):
        with self.assertRaises(NotInvertibleError):
            inverse_automaton(constant_zero())

    def test_round_trip(self):
        a = build_aleshin()
        inverse = inverse_automaton(a)
        for q in range(a.num_states):
            forward, backward = InitialRef(a, q), InitialRef(inverse, q)
            for n in (0, 1, 5, 12):
                for w in all_words(2, n):
                    self.assertEqual(backward(forward(w)), w)


class ReverseTestCase(unittest.TestCase):
    def test_reverse_of_e_swaps_alpha_and_beta(self):
        e = build_e()
        r = reverse_automaton(e)
        pairs = ((ALPHA, BETA), (BETA, ALPHA), (GAMMA, GAMMA))
        for n in range(4):
            for w in all_words(6, n):
                for rq, eq in pairs:
                    self.assertEqual(InitialRef(r, rq)(w), InitialRef(e, eq)(w))

    def test_one_state_reverse_is_itself(self):
        self.assertEqual(reverse_automaton(ternary_identity()), ternary_identity())

    def test_aleshin_has_reverse(self):
        r = reverse_automaton(build_aleshin())
        self.assertEqual(r.num_states, 3)

    def test_not_reversible(self):
        a = Automaton(("p", "q"), ("0",), ((0,), (0,)), ((0,), (0,)))
        with self.assertRaises(NotReversibleError):
            reverse_automaton(a)

    def _assert_reversed_orbits(self, a: Automaton, max_len: int):
        r = reverse_automaton(a)
        names = list(a.state_names)
        maps_a = generator_maps(states_to_refs(a, names), "semigroup")
        maps_r = generator_maps(states_to_refs(r, names), "semigroup")
        for n in range(max_len + 1):
            with self.subTest(length=n):
                blocks = orbit_partition(maps_a, a.num_letters, n)
                reversed_blocks = orbit_partition(maps_r, a.num_letters, n)
                self.assertEqual(
                    {frozenset(w[::-1] for w in block) for block in blocks},
                    set(reversed_blocks),
                )

    def test_reversed_word_orbits_aleshin(self):
        self._assert_reversed_orbits(build_aleshin(), 8)

    def test_reversed_word_orbits_e(self):
        self._assert_reversed_orbits(build_e(), 6)


class DualTestCase(unittest.TestCase):
    def test_double_dual(self):
        for a in (build_aleshin(), build_b(), build_e(), constant_zero()):
            self.assertEqual(dual_automaton(dual_automaton(a)), a)

    def test_dual_of_b(self):
        d = dual_automaton(build_b())
        self.assertEqual(d.state_names, ("0", "1"))
        self.assertEqual(d.num_letters, 6)
        # D_0 lê a: escreve c e vai para 1
        self.assertEqual(d.output[0][A], C)
        self.assertEqual(d.transition[0][A], 1)

    def test_section_word(self):
        b = build_b()
        self.assertEqual(section_word(b, (C,), letters("0")), (A,))
        self.assertEqual(section_word(b, (A, B), letters("0")), (C, C))
        self.assertEqual(section_word(b, (A, B), ()), (A, B))


class DualityIdentitiesTestCase(unittest.TestCase):
    """A_ξ(wu) = A_ξ(w)A_{D_w(ξ)}(u) e D_w(ξη) = D_w(ξ)D_{A_ξ(w)}(η)."""

    def _check(self, samples: int):
        b = build_b()
        rng = random.Random(2024)

        def state_word():
            return tuple(rng.randrange(6) for _ in range(rng.randrange(6)))

        def tree_word():
            return tuple(rng.randrange(2) for _ in range(rng.randrange(7)))

        for _ in range(samples):
            xi, eta, w, u = state_word(), state_word(), tree_word(), tree_word()
            self.assertEqual(
                act_word(b, xi, w + u),
                act_word(b, xi, w) + act_word(b, section_word(b, xi, w), u),
            )
            self.assertEqual(
                section_word(b, xi + eta, w),
                section_word(b, xi, w) + section_word(b, eta, act_word(b, xi, w)),
            )

    def test_random_samples(self):
        self._check(500)

    @pytest.mark.slow
    def test_many_random_samples(self):
        self._check(10_000)

    def test_sections_of_identity_are_identity(self):
        b = build_b()
        rng = random.Random(11)
        for _ in range(30):
            half = tuple(rng.randrange(6) for _ in range(rng.randrange(1, 4)))
            xi = half + tuple((q + 3) % 6 for q in reversed(half))
            for n in range(4):
                for w in all_words(2, n):
                    section = section_word(b, xi, w)
                    for u in all_words(2, 4):
                        self.assertEqual(act_word(b, section, u), u)


class UnionTestCase(unittest.TestCase):
    def test_b_has_six_states(self):
        self.assertEqual(build_b().num_states, 6)

    def test_state_clash(self):
        with self.assertRaises(StateClashError):
            disjoint_union(build_aleshin(), build_aleshin())

    def test_alphabet_mismatch(self):
        with self.assertRaises(AlphabetMismatchError):
            disjoint_union(build_aleshin(), ternary_identity())

    def test_union_acts_as_components(self):
        renamed = rename_states(build_aleshin(), {"a": "x", "b": "y", "c": "z"})
        union = disjoint_union(build_aleshin(), renamed)
        for n in range(5):
            for w in all_words(2, n):
                for q in range(3):
                    self.assertEqual(InitialRef(union, q)(w), InitialRef(union, q + 3)(w))

    def test_rename_unknown_state(self):
        with self.assertRaises(UnknownSymbolError):
            rename_states(build_aleshin(), {"z": "w"})

    def test_rename_collision(self):
        with self.assertRaises(DuplicateEntryError):
            rename_states(build_aleshin(), {"a": "b"})


class TreeOrbitTestCase(unittest.TestCase):
    def setUp(self):
        self.b = build_b()
        self.gens = states_to_refs(self.b, self.b.state_names)

    def test_first_level(self):
        self.assertEqual(tree_orbit(self.gens, letters("0")), {letters("0"), letters("1")})

    def test_empty_word(self):
        self.assertEqual(tree_orbit(self.gens, ()), {()})

    def test_semigroup_and_group_agree(self):
        for n in range(7):
            for w in all_words(2, n):
                self.assertEqual(
                    tree_orbit(self.gens[:3], w, "semigroup"),
                    tree_orbit(self.gens[:3], w, "group"),
                )

    def test_group_mode_requires_invertible(self):
        with self.assertRaises(NotInvertibleError):
            tree_orbit([InitialRef(constant_zero(), 0)], letters("0"), "group")

    def test_generators_from_different_automata(self):
        with self.assertRaises(AutomatonMismatchError):
            tree_orbit([InitialRef(self.b, 0), InitialRef(build_aleshin(), 0)], letters("0"))
