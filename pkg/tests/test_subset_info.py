from __future__ import absolute_import, division, print_function
import unittest
from fractions import Fraction

from builtins import *  # @UnusedWildImport

try:
    from unittest import mock
except ImportError:
    import mock

from sumfree_lab.checks import (GroupTables, SubsetInfo,
                                check_backend_agreement, coset_profile,
                                coset_triple_matrix)
from sumfree_lab.enums import CheckName, ErrorCode, GroupTypeTag
from sumfree_lab.errors import LabError
from sumfree_lab.fourier import (FFT, character_from_rank,
                                 subset_from_elements)
from sumfree_lab.groups import make_group


class TestGroupTables(unittest.TestCase):
    def test_tables(self):
        tables = GroupTables(make_group([7]))
        self.assertEqual(tables.addition[3][5], 1)
        self.assertEqual(len(tables.characters.characters), 7)
        self.assertEqual(tables.group_type.tag, GroupTypeTag.TYPE_III)
        self.assertEqual(tables.mu, Fraction(2, 7))
        self.assertIsNone(GroupTables(make_group([])).mu)


class TestSubsetInfo(unittest.TestCase):
    def setUp(self):
        self.group = make_group([2, 6])
        self.subset = subset_from_elements(self.group, [1, 4, 7, 9])
        self.info = SubsetInfo(self.subset)

    def test_stats(self):
        self.assertEqual(self.info.density, Fraction(1, 3))
        self.assertEqual(self.info.fourier_stats(FFT).ordered_triple_count,
                         self.info.schur_stats.ordered_triple_count)
        self.assertEqual(self.info.delta, self.info.schur_stats.delta)
        self.assertEqual(len(self.info.transform()), 12)

    def test_cached_profiles(self):
        character = character_from_rank(self.group, 5)
        profile = self.info.get_profile(character)
        self.assertIs(self.info.get_profile(character), profile)
        self.assertEqual(profile.part_counts,
                         coset_profile(self.subset, character).part_counts)
        self.assertEqual(self.info.get_triple_matrix(character),
                         coset_triple_matrix(self.subset, profile))

    def test_special_direction(self):
        character, _ = self.info.special_direction
        self.assertFalse(character.is_trivial)
        self.assertIs(self.info.special_direction[0], character)


class TestBackendAgreement(unittest.TestCase):
    def test_agree(self):
        subset = subset_from_elements(make_group([10]), [1, 2, 3])
        report = check_backend_agreement(subset)
        self.assertEqual(report.check_name, CheckName.BACKEND_AGREEMENT)
        self.assertEqual((report.lhs, report.rhs, report.holds), (0, 0, True))
        self.assertTrue(report.hard)

    def test_non_integer_count(self):
        subset = subset_from_elements(make_group([10]), [1, 2, 3])
        error = LabError(ErrorCode.INCONSISTENT, "not an integer")
        with mock.patch('sumfree_lab.checks.backends.schur_count_fourier',
                        side_effect=error):
            with self.assertLogs('sumfree_lab.checks.backends', 'WARNING'):
                report = check_backend_agreement(subset)
        self.assertIsNone(report.lhs)
        self.assertFalse(report.holds)


if __name__ == '__main__':
    unittest.main()
