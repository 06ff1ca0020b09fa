from __future__ import absolute_import, division, print_function
import math
import random
import unittest
from fractions import Fraction

from builtins import *  # @UnusedWildImport

from sumfree_lab.config import SweepConfig, parse_checks
from sumfree_lab.enums import CheckName, EmitMode
from sumfree_lab.groups import make_group
from sumfree_lab.report import format_reports, report_row
from sumfree_lab.sweep import (item_seed, lt_thresholds, random_subset,
                               run_item, run_sweep, sample_probability,
                               select_characters)


class TestSeeds(unittest.TestCase):
    def test_item_seed(self):
        self.assertEqual(item_seed(1, make_group([7]), 0),
                         0xb0bf5660fbcd4625)
        self.assertEqual(item_seed(42, make_group([2, 6]), 3),
                         0x7573feaa6368de09)

    def test_sample_probability(self):
        group = make_group([7])
        self.assertEqual([sample_probability(group, s) for s in range(5)],
                         [0.1, 0.3, 0.5, 2.0 / 7, 0.1])

    def test_random_subset(self):
        group = make_group([40])
        a = random_subset(group, random.Random(5), 0.5)
        b = random_subset(group, random.Random(5), 0.5)
        self.assertEqual(a, b)
        self.assertEqual(random_subset(group, random.Random(5), 0).size, 0)

    def test_select_characters(self):
        group = make_group([10])
        self.assertEqual(select_characters(group, random.Random(1), 4096),
                         list(range(1, 10)))
        ranks = select_characters(group, random.Random(1), 40)
        self.assertEqual(len(ranks), 4)
        self.assertEqual(ranks, sorted(ranks))
        self.assertNotIn(0, ranks)

    def test_lt_thresholds(self):
        self.assertEqual(lt_thresholds(0, 7), [Fraction(1, 2)])
        thresholds = lt_thresholds(Fraction(1, 7), 7)
        self.assertEqual(thresholds, [Fraction(1, 2), Fraction(1)])


class TestSweep(unittest.TestCase):
    def test_z7_middle_sum_row(self):
        cfg = SweepConfig(max_order=7, checks=parse_checks("middle_sum"))
        result = run_sweep(cfg)
        rows = [report_row(r) for r in result.reports]
        row = [r for r in rows if r['group'] == "7"
               and r['subset'] == "0xc"][0]
        self.assertEqual((row['char'], row['lhs'], row['rhs'], row['holds']),
                         ("1", "2", "2", "true"))
        self.assertEqual(result.hard_failures, 0)
        # only Z7 has characters of order 1 mod 6
        self.assertEqual(len(result.reports), 128)

    def test_one_row_per_subset_and_check(self):
        cfg = SweepConfig(max_order=8, exhaustive_limit=8)
        reports = run_sweep(cfg).reports
        keys = [(r.check_name, r.context['group'], r.context['subset'])
                for r in reports]
        self.assertEqual(len(set(keys)), len(keys))
        # the six characters of Z7 reduce to a single lt row
        lt_rows = [r for r in reports if r.check_name == CheckName.LT
                   and r.context['group'] == "7"
                   and r.context['subset'] == "0xc"]
        self.assertEqual(len(lt_rows), 1)

    def test_subset_count(self):
        cfg = SweepConfig(max_order=6, samples_per_group=3,
                          exhaustive_limit=4,
                          checks=parse_checks("backend_agreement"))
        result = run_sweep(cfg)
        # 2 + 4 + 8 + 16 + 16 exhaustive, 3 samples each of Z5 and Z6
        self.assertEqual(result.subset_count, 52)
        self.assertEqual(len(result.reports), 52)
        self.assertTrue(all(r.holds for r in result.reports))

    def test_no_hard_failures(self):
        cfg = SweepConfig(max_order=10, samples_per_group=4,
                          exhaustive_limit=8)
        result = run_sweep(cfg)
        self.assertEqual(result.hard_failures, 0)
        checks_seen = set(r.check_name for r in result.reports)
        self.assertIn(CheckName.SPECIAL_DIRECTION, checks_seen)
        self.assertIn(CheckName.ALPHAL, checks_seen)

    def test_deterministic(self):
        cfg = SweepConfig(max_order=9, samples_per_group=4,
                          exhaustive_limit=5, rng_seed=3)
        first = format_reports(run_sweep(cfg).reports)
        self.assertEqual(format_reports(run_sweep(cfg).reports), first)
        cfg.workers = 2
        self.assertEqual(format_reports(run_sweep(cfg).reports), first)

    def test_seed_changes_samples(self):
        base = dict(max_order=16, samples_per_group=4, exhaustive_limit=2,
                    checks=parse_checks("backend_agreement"))
        a = run_sweep(SweepConfig(rng_seed=1, **base)).reports
        b = run_sweep(SweepConfig(rng_seed=2, **base)).reports
        self.assertNotEqual([r.context['subset'] for r in a],
                            [r.context['subset'] for r in b])

    def test_emit_failures(self):
        cfg = SweepConfig(max_order=8, exhaustive_limit=8,
                          emit=EmitMode.FAILURES)
        result = run_sweep(cfg)
        self.assertTrue(all(r.holds is False for r in result.reports))
        self.assertEqual(result.hard_failures, 0)

    def test_run_item(self):
        cfg = SweepConfig(max_order=7, checks=parse_checks("lt"))
        spec, count, reports = run_item(((7,), True, [0xc, 0x7f], cfg))
        self.assertEqual((spec, count), ("7", 2))
        self.assertEqual(len(reports), 2)
        full = [r for r in reports if r.context['subset'] == "0x7f"][0]
        # t = 7^1/2 leaves the least margin on the full set
        self.assertEqual(full.context['params']['t'], Fraction(math.sqrt(7)))
        self.assertEqual(full.lhs, 0)
        self.assertTrue(full.holds)


if __name__ == '__main__':
    unittest.main()
