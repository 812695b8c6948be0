import itertools
import random
import unittest

from src.core.exceptions import ReducibleWordError
from src.domain.entities import Permutation, Sign, WClass
from src.domain.entities.words import A, A_INV, B, B_INV, C, C_INV
from src.services.aleshin import (
    ALPHA,
    BETA,
    GAMMA,
    SIGMA_ALPHA,
    SIGMA_BETA,
    base_permutation,
    build_aleshin,
    build_b,
    build_dual_d,
    build_e,
    chi,
    d_generator,
    e_generator,
    free_reduce,
    inverse_word,
    is_freely_irreducible,
    lift_permutation,
    parity_transform,
    pattern_of,
    qpm_permutation,
    reverse_word,
    strip_c,
    w_class,
    z_set,
)
from src.services.automata import (
    all_words,
    disjoint_union,
    dual_automaton,
    inverse_automaton,
    is_invertible,
    rename_states,
    transduce,
)

PLUS, MINUS = Sign.PLUS, Sign.MINUS


def random_words(seed: int, count: int, max_len: int):
    rng = random.Random(seed)
    for _ in range(count):
        yield tuple(rng.randrange(6) for _ in range(rng.randrange(max_len + 1)))


class BuildersTestCase(unittest.TestCase):
    def test_aleshin(self):
        a = build_aleshin()
        self.assertTrue(is_invertible(a))
        c = a.state_index("c")
        self.assertEqual(a.output[c][1], 1)
        self.assertEqual(a.transition[c][1], a.state_index("a"))

    def test_b_is_union_with_renamed_inverse(self):
        a = build_aleshin()
        renamed = rename_states(
            inverse_automaton(a), {"a": "a^-1", "b": "b^-1", "c": "c^-1"}
        )
        self.assertEqual(build_b(), disjoint_union(a, renamed))
        self.assertEqual(build_b().state_names, ("a", "b", "c", "a^-1", "b^-1", "c^-1"))

    def test_b_inverse_of_a_on_one(self):
        b = build_b()
        self.assertEqual(b.transition[A_INV][1], C_INV)
        self.assertEqual(b.output[A_INV][1], 0)

    def test_d_rows(self):
        d = build_dual_d()
        self.assertEqual(d.output[0][C], A)
        self.assertEqual(d.transition[0][C], 0)
        self.assertEqual(transduce(d_generator(0), (A, B)), (C, C))
        self.assertEqual(transduce(d_generator(0), (A, A_INV)), (C, C_INV))
        self.assertEqual(dual_automaton(d), build_b())

    def test_e(self):
        e = build_e()
        self.assertTrue(is_invertible(e))
        self.assertEqual(inverse_automaton(e), e)
        self.assertEqual(transduce(e_generator(ALPHA), (A, B)), (A, A))

    def test_e_gamma_is_lift_of_bc(self):
        pi_bc = lift_permutation(base_permutation("(b c)"))
        gamma = e_generator(GAMMA)
        for n in range(7):
            for w in all_words(6, n):
                self.assertEqual(gamma(w), pi_bc(w))


class ParityTransformTestCase(unittest.TestCase):
    def setUp(self):
        self.sigma_0 = qpm_permutation("(a c)(a^-1 b^-1 c^-1)")
        self.sigma_1 = qpm_permutation("(a b c)(a^-1 c^-1)")

    def test_matches_transduction(self):
        cases = (
            (e_generator(ALPHA), SIGMA_ALPHA, SIGMA_BETA),
            (e_generator(BETA), SIGMA_BETA, SIGMA_ALPHA),
            (d_generator(0), self.sigma_0, self.sigma_1),
            (d_generator(1), self.sigma_1, self.sigma_0),
        )
        for xi in random_words(5, 300, 8):
            for ref, even, odd in cases:
                self.assertEqual(ref(xi), parity_transform(xi, even, odd))

    def test_d_rows_factor_through_e(self):
        pi_ac = lift_permutation(base_permutation("(a c)")).permutation
        pi_abc = lift_permutation(base_permutation("(a b c)")).permutation
        self.assertEqual(pi_ac.compose(SIGMA_ALPHA), self.sigma_0)
        self.assertEqual(pi_abc.compose(SIGMA_BETA), self.sigma_0)
        self.assertEqual(pi_abc.compose(SIGMA_ALPHA), self.sigma_1)
        self.assertEqual(pi_ac.compose(SIGMA_BETA), self.sigma_1)


class LiftTestCase(unittest.TestCase):
    def test_cycle_on_a(self):
        pi = lift_permutation(base_permutation("(abc)"))
        self.assertEqual(pi((A,)), (B,))
        self.assertEqual(pi(()), ())
        self.assertEqual(pi((A, B_INV)), (B, C_INV))
        self.assertEqual(pi.label, "pi[bca]")

    def test_lift_is_homomorphism(self):
        perms = [Permutation(p) for p in itertools.permutations(range(3))]
        words = list(random_words(3, 50, 6))
        for t1, t2 in itertools.product(perms, repeat=2):
            composed = lift_permutation(t1.compose(t2))
            p1, p2 = lift_permutation(t1), lift_permutation(t2)
            for w in words:
                self.assertEqual(composed(w), p1(p2(w)))
                self.assertEqual(lift_permutation(t2.inverse())(p2(w)), w)

    def test_rejects_wrong_size(self):
        with self.assertRaises(ValueError):
            lift_permutation(SIGMA_ALPHA)


class WordsTestCase(unittest.TestCase):
    def test_chi(self):
        self.assertEqual(chi((A,)), -1)
        self.assertEqual(chi(()), 1)
        self.assertEqual(chi((C, A, B_INV)), 1)
        self.assertEqual(chi((A, B_INV)), 1)

    def test_pattern(self):
        self.assertEqual(pattern_of((A, B_INV, C)), (PLUS, MINUS, PLUS))
        self.assertEqual(pattern_of(()), ())

    def test_pattern_preserved_by_generators(self):
        gens = [e_generator(s) for s in (ALPHA, BETA, GAMMA)]
        pi = lift_permutation(base_permutation("(abc)"))
        for xi in random_words(9, 300, 8):
            for g in (*gens, pi):
                self.assertEqual(pattern_of(g(xi)), pattern_of(xi))

    def test_cancelling_pairs_invariant(self):
        cancelling = {(q, (q + 3) % 6) for q in range(6)}
        gens = [e_generator(s) for s in (ALPHA, BETA, GAMMA)]
        for xi in random_words(13, 500, 7):
            for g in gens:
                image = g(xi)
                for i in range(len(xi) - 1):
                    pair, image_pair = xi[i : i + 2], image[i : i + 2]
                    self.assertEqual(pair in cancelling, image_pair in cancelling)

    def test_irreducibility(self):
        self.assertFalse(is_freely_irreducible((A, A_INV, B)))
        self.assertTrue(is_freely_irreducible((A, A, B_INV)))
        self.assertTrue(is_freely_irreducible(()))

    def test_free_reduce(self):
        self.assertEqual(free_reduce((A, A_INV)), ())
        self.assertEqual(free_reduce((A, B, B_INV, A)), (A, A))
        self.assertEqual(free_reduce((A, B_INV, C)), (A, B_INV, C))
        self.assertEqual(free_reduce((A, B, C, C_INV, B_INV, A_INV)), ())

    def test_inverse_and_reverse(self):
        self.assertEqual(inverse_word((A, B_INV, C)), (C_INV, B, A_INV))
        self.assertEqual(reverse_word((A, B_INV, C)), (C, B_INV, A))
        for xi in random_words(17, 100, 6):
            self.assertEqual(reverse_word(reverse_word(xi)), xi)
            self.assertEqual(free_reduce(xi + inverse_word(xi)), ())

    def test_strip_c(self):
        self.assertEqual(strip_c((A, C, B_INV, C_INV)), (A, B_INV))
        self.assertEqual(strip_c(()), ())
        self.assertEqual(strip_c((C, C_INV, C)), ())
        for xi, eta in zip(random_words(19, 50, 5), random_words(23, 50, 5)):
            self.assertEqual(strip_c(xi + eta), strip_c(xi) + strip_c(eta))

    def test_w_class(self):
        self.assertEqual(w_class((B_INV, A)), {WClass.MINUS_PLUS})
        self.assertEqual(w_class((A, C, B_INV)), {WClass.PLUS_MINUS})
        self.assertEqual(w_class((A, A)), set())
        self.assertEqual(w_class((A, B_INV, A)), {WClass.PLUS_PLUS})
        self.assertEqual(w_class((B_INV,)), {WClass.MINUS_MINUS})
        self.assertEqual(w_class(()), {WClass.PLUS_MINUS, WClass.MINUS_PLUS})
        self.assertEqual(w_class((C,)), {WClass.PLUS_MINUS, WClass.MINUS_PLUS})

    def test_z_set(self):
        self.assertEqual(z_set((A, B)), {(A, A), (A, B), (A, C)})
        self.assertEqual(z_set((A, B_INV)), {(A, B_INV), (A, C_INV)})
        self.assertEqual(z_set(()), {()})

    def test_z_set_rejects_reducible(self):
        with self.assertRaises(ReducibleWordError):
            z_set((A, A_INV))
