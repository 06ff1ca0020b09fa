from __future__ import absolute_import, division, print_function
import math
import unittest
from fractions import Fraction

from builtins import *  # @UnusedWildImport

from qcheck import check_unittest, gen_group, seeded
from sumfree_lab.checks import (check_cosine_sum, check_sord,
                                check_special_direction_bound)
from sumfree_lab.config import ConstantsConfig
from sumfree_lab.enums import CheckName, ErrorCode
from sumfree_lab.errors import LabError
from sumfree_lab.fourier import (FFT, empty_subset, full_subset,
                                 subset_from_elements)
from sumfree_lab.groups import make_group
from sumfree_lab.structs import Subset


class TestSpecialDirection(unittest.TestCase):
    def test_z7(self):
        group = make_group([7])
        subset = subset_from_elements(group, [2, 3])
        report = check_special_direction_bound(subset)
        self.assertEqual(report.check_name, CheckName.SPECIAL_DIRECTION)
        self.assertAlmostEqual(report.lhs, math.cos(4 * math.pi / 7)
                               + math.cos(6 * math.pi / 7))
        self.assertEqual(report.rhs, Fraction(-4, 5))
        self.assertTrue(report.holds)
        self.assertEqual(report.context['char'], "1")
        fft_report = check_special_direction_bound(subset, FFT)
        self.assertEqual(fft_report.context['char'], "1")

    def test_degenerate(self):
        group = make_group([6])
        for subset in (empty_subset(group), full_subset(group)):
            with self.assertRaises(LabError) as ctx:
                check_special_direction_bound(subset)
            self.assertEqual(ctx.exception.errorcode,
                             ErrorCode.DEGENERATEDENSITY)

    def test_trivial_group(self):
        with self.assertRaises(LabError) as ctx:
            check_special_direction_bound(Subset(make_group([]), 1))
        self.assertEqual(ctx.exception.errorcode, ErrorCode.TRIVIALGROUP)

    def test_always_holds(self):
        rng = seeded(61)
        groups = gen_group(rng, 40, min_order=3)

        def proper_subset():
            group = groups()
            while True:
                mask = rng.getrandbits(group.order)
                if 0 < mask < (1 << group.order) - 1:
                    return Subset(group, mask)

        check_unittest(self,
                       lambda s: check_special_direction_bound(s).holds,
                       proper_subset, target=80)


class TestCosineSum(unittest.TestCase):
    def setUp(self):
        self.constants = ConstantsConfig()

    def test_z7_sumfree(self):
        group = make_group([7])
        report = check_cosine_sum(subset_from_elements(group, [2, 3]),
                                  self.constants)
        self.assertEqual(report.check_name, CheckName.COSINE_SUM)
        expected = ((math.cos(4 * math.pi / 7) + math.cos(6 * math.pi / 7))
                    / 7 + 4.0 / 35)
        self.assertAlmostEqual(report.lhs, expected)
        self.assertEqual(report.rhs, 0)
        self.assertTrue(report.holds)
        self.assertFalse(report.hard)
        self.assertEqual(report.context['params']['eta'], 2.0 ** -20)

    def test_not_applicable(self):
        cases = [
            # not type III
            subset_from_elements(make_group([10]), [1, 3, 5, 7, 9]),
            # below mu(G) n
            subset_from_elements(make_group([7]), [3]),
            # delta above eta / 5
            subset_from_elements(make_group([7]), [1, 2, 3]),
        ]
        for subset in cases:
            report = check_cosine_sum(subset, self.constants)
            self.assertIsNone(report.holds, repr(subset))
            self.assertIsNone(report.lhs)
        report = check_cosine_sum(Subset(make_group([]), 0), self.constants)
        self.assertIsNone(report.holds)
        self.assertEqual(report.context['char'], "")


def _slab_plus_one():
    # {x : x1 in {2, 3}} plus (4, 0, 0) in Z7^3: 99 > mu n elements, T = 49
    group = make_group([7, 7, 7])
    return subset_from_elements(group, range(98, 197))


class TestSord(unittest.TestCase):
    def setUp(self):
        self.constants = ConstantsConfig(eta_sord=8)

    def test_edge_cosets_empty(self):
        subset = _slab_plus_one()
        report = check_sord(subset, self.constants)
        self.assertEqual(report.check_name, CheckName.SORD)
        self.assertEqual(report.lhs, 0)
        self.assertTrue(report.holds)
        self.assertNotEqual(report.context['char'], "")
        self.assertNotIn('indices', report.context['params'])
        self.assertEqual(report.context['params']['q0'], 11)

    def test_explicit_indices(self):
        report = check_sord(_slab_plus_one(), self.constants,
                            indices=[4, 3, 2, 2])
        self.assertEqual(report.lhs, 1)
        self.assertTrue(report.holds)
        self.assertEqual(report.context['params']['indices'], [2, 3, 4])

    def test_density_at_most_mu(self):
        group = make_group([7])
        report = check_sord(subset_from_elements(group, [2, 3]),
                            self.constants, indices=[2, 3])
        self.assertIsNone(report.holds)
        self.assertEqual(report.context['char'], "")
        report = check_sord(Subset(make_group([13]), 100), ConstantsConfig())
        self.assertIsNone(report.holds)

    def test_order_above_q0(self):
        constants = ConstantsConfig(eta_sord=8, q0=5)
        report = check_sord(_slab_plus_one(), constants)
        self.assertIsNone(report.holds)
        self.assertEqual(report.context['params']['q0'], 5)

    def test_not_applicable(self):
        report = check_sord(subset_from_elements(make_group([9]), [1, 4, 7]),
                            self.constants)
        self.assertIsNone(report.holds)
        # delta m^3 >= 1
        report = check_sord(subset_from_elements(make_group([7]), [1, 2, 3]),
                            self.constants)
        self.assertIsNone(report.holds)
        # delta above eta_sord / q^5
        report = check_sord(_slab_plus_one(), ConstantsConfig())
        self.assertIsNone(report.holds)


if __name__ == '__main__':
    unittest.main()
