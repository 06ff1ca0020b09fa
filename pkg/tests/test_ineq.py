from __future__ import absolute_import, division, print_function
import unittest
from fractions import Fraction

from builtins import *  # @UnusedWildImport

from qcheck import check_unittest, gen_subset, seeded
from sumfree_lab.checks import (check_alphal, check_alphal_pair, check_Lt,
                                check_triple_lower_bound, coset_profile,
                                coset_triple_matrix, large_pair_indices)
from sumfree_lab.checks.ineq import alphal_slack, triple_lower_bound_slack
from sumfree_lab.enums import CheckName, ErrorCode
from sumfree_lab.errors import LabError
from sumfree_lab.fourier import (character_from_rank, empty_subset,
                                 full_subset, schur_count_bruteforce,
                                 subset_from_elements)
from sumfree_lab.groups import enumerate_groups, make_group


def _profiles(seed, max_order=30):
    rng = seeded(seed)
    groups = [g for g in enumerate_groups(max_order) if g.order >= 2]
    subsets = gen_subset(rng, lambda: rng.choice(groups))

    def a_profile():
        subset = subsets()
        group = subset.owner
        character = character_from_rank(group, rng.randrange(1, group.order))
        return coset_profile(subset, character)
    return rng, a_profile


class TestTripleLowerBound(unittest.TestCase):
    def test_full_set(self):
        group = make_group([12])
        subset = full_subset(group)
        profile = coset_profile(subset, character_from_rank(group, 2))
        report = check_triple_lower_bound(subset, profile, 1, 3)
        self.assertEqual(report.check_name, CheckName.TRIPLE_LOWER_BOUND)
        self.assertEqual(report.lhs, 4)
        self.assertEqual(report.rhs, 4)
        self.assertTrue(report.holds)
        self.assertTrue(report.hard)
        self.assertEqual(list(report.context['params'].items()),
                         [('l', 1), ('j', 3)])

    def test_indices_reduced(self):
        group = make_group([7])
        subset = subset_from_elements(group, [1, 2, 3])
        profile = coset_profile(subset, character_from_rank(group, 1))
        report = check_triple_lower_bound(subset, profile, 8, -1)
        self.assertEqual(report.context['params']['l'], 1)
        self.assertEqual(report.context['params']['j'], 6)

    def test_always_holds(self):
        rng, gen = _profiles(41)

        def holds(profile):
            subset = profile.subset
            q = profile.q
            matrix = coset_triple_matrix(subset, profile)
            for _ in range(10):
                l, j = rng.randrange(q), rng.randrange(q)
                if not check_triple_lower_bound(subset, profile, l, j,
                                                matrix).holds:
                    return False
                if triple_lower_bound_slack(profile, matrix, l, j) < 0:
                    return False
            return True

        check_unittest(self, holds, gen, target=60)


class TestAlphal(unittest.TestCase):
    def test_empty(self):
        group = make_group([9])
        profile = coset_profile(empty_subset(group),
                                character_from_rank(group, 3))
        self.assertEqual(check_alphal(profile, 0), [])

    def test_zero_alpha(self):
        group = make_group([6])
        profile = coset_profile(subset_from_elements(group, [1, 2, 4]),
                                character_from_rank(group, 2))
        with self.assertRaises(LabError) as ctx:
            check_alphal_pair(profile, 0, 0, 1)
        self.assertEqual(ctx.exception.errorcode, ErrorCode.BADPARAMETER)
        self.assertIsNone(alphal_slack(profile, 0, 0, 1))
        # one report per (l, j) with alpha_l > 0
        self.assertEqual(len(check_alphal(profile, 0)), 6)

    def test_full_set(self):
        group = make_group([10])
        profile = coset_profile(full_subset(group),
                                character_from_rank(group, 5))
        reports = check_alphal(profile, 1)
        self.assertEqual(len(reports), 4)
        for report in reports:
            self.assertEqual(report.lhs, 2)
            self.assertEqual(report.rhs, 5)
            self.assertTrue(report.holds)

    def test_sumfree_bound(self):
        # with delta = 0 no coset pair can exceed density 1
        group = make_group([9])
        subset = subset_from_elements(group, [1, 4, 7])
        profile = coset_profile(subset, character_from_rank(group, 3))
        for report in check_alphal(profile, 0):
            self.assertLessEqual(report.lhs, 1)
            self.assertTrue(report.holds)

    def test_always_holds(self):
        _, gen = _profiles(42)

        def holds(profile):
            stats = schur_count_bruteforce(profile.subset)
            for report in check_alphal(profile, stats.delta):
                if not report.holds:
                    return False
            q = profile.q
            for l in range(q):
                for j in range(q):
                    slack = alphal_slack(profile,
                                         stats.ordered_triple_count, l, j)
                    if slack is not None and slack < 0:
                        return False
            return True

        check_unittest(self, holds, gen, target=60)


class TestLt(unittest.TestCase):
    def test_full_set(self):
        group = make_group([7])
        profile = coset_profile(full_subset(group),
                                character_from_rank(group, 1))
        report = check_Lt(profile, Fraction(1, 2), 1)
        self.assertEqual(report.lhs, 7)
        self.assertEqual(report.rhs, 98)
        self.assertTrue(report.holds)
        self.assertEqual(large_pair_indices(profile, Fraction(1, 2)),
                         list(range(7)))
        self.assertEqual(large_pair_indices(profile, 2), [])

    def test_threshold_inclusive(self):
        group = make_group([5])
        subset = subset_from_elements(group, [1, 2])
        profile = coset_profile(subset, character_from_rank(group, 1))
        # alpha_1 + alpha_2 = 2 = 1 + t at t = 1
        self.assertEqual(large_pair_indices(profile, 1), [1])

    def test_bad_threshold(self):
        group = make_group([5])
        profile = coset_profile(full_subset(group),
                                character_from_rank(group, 1))
        for t in (0, -1):
            with self.assertRaises(LabError) as ctx:
                check_Lt(profile, t, 1)
            self.assertEqual(ctx.exception.errorcode, ErrorCode.BADPARAMETER)

    def test_always_holds(self):
        rng, gen = _profiles(43)

        def holds(profile):
            delta = schur_count_bruteforce(profile.subset).delta
            for t in (Fraction(1, 4), Fraction(1, 2), Fraction(1),
                      Fraction(rng.randrange(1, 20), 20)):
                if not check_Lt(profile, t, delta).holds:
                    return False
            return True

        check_unittest(self, holds, gen, target=60)


if __name__ == '__main__':
    unittest.main()
