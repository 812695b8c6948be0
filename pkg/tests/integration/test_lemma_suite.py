import unittest

import pytest

from src.services.lemma_suite import (
    LEMMAS,
    check_free2,
    check_free3,
    check_free4_orbit,
    check_ind3,
    check_ind4,
    check_ind5,
    check_ind6,
    check_indextra,
    run_lemma_suite,
)


class LemmaSuiteTestCase(unittest.TestCase):
    def test_registry_names(self):
        self.assertEqual(
            list(LEMMAS),
            [
                "free1",
                "free2",
                "free3",
                "free4-orbit",
                "ind1",
                "ind2",
                "ind3",
                "ind4",
                "ind5",
                "ind6",
                "indextra",
            ],
        )

    def test_small_run_passes(self):
        results = run_lemma_suite(3)
        self.assertEqual([r.name for r in results], list(LEMMAS))
        for result in results:
            with self.subTest(result.name):
                self.assertTrue(result.passed, result.detail)
                self.assertEqual(result.detail, "")
                self.assertGreater(result.checked, 0)

    def test_selection_keeps_registry_order(self):
        results = run_lemma_suite(2, ["ind4", "free1"])
        self.assertEqual([r.name for r in results], ["free1", "ind4"])

    def test_unknown_lemma(self):
        with self.assertRaises(KeyError):
            run_lemma_suite(2, ["ind9"])

    def test_ind3_pattern_count(self):
        # 2 + 4 + … + 2⁴ padrões
        self.assertEqual(check_ind3(4).checked, 30)


@pytest.mark.slow
class FullRangeLemmaTestCase(unittest.TestCase):
    def test_default_range(self):
        for result in run_lemma_suite(6):
            with self.subTest(result.name):
                self.assertTrue(result.passed, result.detail)

    def test_e_and_d_identities_up_to_seven(self):
        for check in (check_free2, check_free3, check_indextra):
            result = check(7)
            self.assertTrue(result.passed, result.detail)

    def test_class_orbits_up_to_seven(self):
        result = check_ind3(7)
        self.assertTrue(result.passed, result.detail)
        self.assertEqual(result.checked, 254)

    def test_orbit_partitions_up_to_six(self):
        for check in (check_free4_orbit, check_ind4):
            result = check(6)
            self.assertTrue(result.passed, result.detail)

    def test_witnesses_up_to_eight(self):
        for check in (check_ind5, check_ind6):
            result = check(8)
            self.assertTrue(result.passed, result.detail)
