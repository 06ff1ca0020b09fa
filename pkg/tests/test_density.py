from __future__ import absolute_import, division, print_function
import unittest
from fractions import Fraction

from builtins import *  # @UnusedWildImport

from sumfree_lab.checks import (check_12ml, check_bgschf,
                                check_density_theorems, check_lm_item1,
                                check_lm_item2)
from sumfree_lab.config import ConstantsConfig
from sumfree_lab.enums import CheckName
from sumfree_lab.fourier import full_subset, subset_from_elements
from sumfree_lab.groups import enumerate_groups, make_group
from sumfree_lab.structs import Subset


class TestDensityChecks(unittest.TestCase):
    def test_12ml(self):
        group = make_group([10])
        report = check_12ml(subset_from_elements(group, [1, 3, 5, 7, 9]), 0)
        self.assertEqual(report.lhs, Fraction(1, 2))
        self.assertEqual(report.rhs, 0.5)
        self.assertTrue(report.holds)
        self.assertTrue(report.hard)
        self.assertEqual(report.context['char'], "")
        # a third always passes
        report = check_12ml(subset_from_elements(make_group([9]),
                                                 [0, 1, 2]), 0)
        self.assertTrue(report.holds)
        report = check_12ml(full_subset(group), 0)
        self.assertFalse(report.holds)

    def test_exact_cube_comparison(self):
        # alpha - mu = 3 delta^1/3 exactly: 1 - 1/2 = 3 (1/216)^1/3
        group = make_group([2])
        report = check_12ml(full_subset(group), Fraction(1, 216))
        self.assertTrue(report.holds)
        report = check_12ml(full_subset(group), Fraction(1, 217))
        self.assertFalse(report.holds)

    def test_lm_items(self):
        group = make_group([7])
        subset = subset_from_elements(group, [2, 3, 4])
        report = check_lm_item1(subset, 0)
        self.assertEqual(report.check_name, CheckName.LM_ITEM1)
        # 3/7 > 2/7 + 1/21
        self.assertFalse(report.holds)
        report = check_lm_item2(subset, Fraction(1, 27))
        self.assertTrue(report.holds)

    def test_bgschf(self):
        group = make_group([7])
        subset = subset_from_elements(group, [2, 3])
        report = check_bgschf(subset, 0, 4.0)
        self.assertTrue(report.holds)
        self.assertFalse(report.hard)
        self.assertEqual(list(report.context['params'].keys()),
                         ['delta', 'C'])


class TestDensityTheorems(unittest.TestCase):
    def test_selection(self):
        group = make_group([7])
        names = [r.check_name for r in check_density_theorems(
            subset_from_elements(group, [2, 3]))]
        self.assertEqual(names, [CheckName.DENSITY_12ML, CheckName.LM_ITEM1,
                                 CheckName.BGSCHF])
        names = [r.check_name for r in check_density_theorems(
            subset_from_elements(group, [1, 2, 3]))]
        self.assertEqual(names, [CheckName.DENSITY_12ML, CheckName.LM_ITEM1,
                                 CheckName.LM_ITEM2, CheckName.BGSCHF])
        names = [r.check_name for r in check_density_theorems(
            full_subset(make_group([10])))]
        self.assertEqual(names, [CheckName.DENSITY_12ML, CheckName.BGSCHF])

    def test_trivial_group(self):
        self.assertEqual(check_density_theorems(Subset(make_group([]), 1)),
                         [])

    def test_constant_from_config(self):
        constants = ConstantsConfig(C_empirical=2.5)
        reports = check_density_theorems(full_subset(make_group([5])),
                                         constants)
        self.assertEqual(reports[-1].context['params']['C'], 2.5)

    def test_exhaustive_small_groups(self):
        for group in enumerate_groups(10):
            if group.order < 2:
                continue
            for mask in range(1 << group.order):
                for report in check_density_theorems(Subset(group, mask)):
                    if report.hard:
                        self.assertTrue(report.holds, "%s %#x %s" % (
                            group, mask, report.check_name))


if __name__ == '__main__':
    unittest.main()
