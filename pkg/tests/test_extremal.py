from __future__ import absolute_import, division, print_function
import math
import unittest
from fractions import Fraction

from builtins import *  # @UnusedWildImport

from qcheck import check_unittest, seeded
from sumfree_lab.checks import (ExtremalCosineProblem,
                                check_cosine_step_monotone,
                                cosine_step_values, enumerate_weighted_cosine,
                                minimize_weighted_cosine,
                                solve_weighted_cosine_lp)
from sumfree_lab.config import ConstantsConfig
from sumfree_lab.enums import ErrorCode
from sumfree_lab.errors import LabError


def gen_problem(rng, max_q):
    def a_problem():
        q = rng.randrange(2, max_q + 1)
        l = rng.randrange(0, (q - 1) // 2 + 1)
        cap = Fraction(rng.randrange(0, 9), rng.randrange(1, 5))
        mass = Fraction(rng.randrange(0, q * 2 + 1), 2) * min(cap, 1)
        return ExtremalCosineProblem(q, l, cap, mass)
    return a_problem


class TestProblem(unittest.TestCase):
    def test_from_constant(self):
        prob = ExtremalCosineProblem.from_constant(10, 13, 0)
        self.assertEqual(prob.cap, Fraction(11, 20))
        self.assertEqual(prob.mass, 4)
        self.assertEqual(prob.q, 13)
        self.assertTrue(prob.is_feasible)
        with self.assertRaises(LabError) as ctx:
            ExtremalCosineProblem.from_constant(10, 12, 0)
        self.assertEqual(ctx.exception.errorcode, ErrorCode.BADMODULUS)

    def test_from_config(self):
        prob = ExtremalCosineProblem.from_config(ConstantsConfig(), 13, 2)
        self.assertEqual((prob.cap, prob.mass, prob.l),
                         (Fraction(11, 20), 4, 2))
        prob = ExtremalCosineProblem.from_config(ConstantsConfig(c=4), 7, 0)
        self.assertEqual(prob.cap, Fraction(5, 8))

    def test_bad_parameters(self):
        for args in ((1, 0, 1, 0), (7, 4, 1, 0), (7, -1, 1, 0),
                     (7, 0, -1, 0), (7, 0, 1, -1)):
            with self.assertRaises(LabError) as ctx:
                ExtremalCosineProblem(*args)
            self.assertEqual(ctx.exception.errorcode, ErrorCode.BADPARAMETER)

    def test_canonical_offset(self):
        self.assertEqual(ExtremalCosineProblem.canonical(7, 9, 1, 0).l, 1)
        self.assertEqual(ExtremalCosineProblem.canonical(7, 13, 1, 0).l, 1)
        self.assertEqual(ExtremalCosineProblem.canonical(7, -2, 1, 0).l, 2)
        self.assertEqual(ExtremalCosineProblem.canonical(7, 6, 1, 0).l, 0)
        with self.assertRaises(LabError) as ctx:
            ExtremalCosineProblem.canonical(2, 1, 1, 0)
        self.assertEqual(ctx.exception.errorcode, ErrorCode.BADPARAMETER)

    def test_canonical_same_coefficients(self):
        for q in range(3, 16):
            for l in range(-2 * q, 2 * q):
                prob = ExtremalCosineProblem.canonical(q, l, 1, 0)
                expected = sorted(math.cos((2 * j + l) * math.pi / q)
                                  for j in range(q))
                actual = sorted(prob.coefficients())
                for a, b in zip(actual, expected):
                    self.assertAlmostEqual(a, b, places=12,
                                           msg="q=%d l=%d" % (q, l))


class TestSolvers(unittest.TestCase):
    def test_greedy_values(self):
        value, weights = minimize_weighted_cosine(
            ExtremalCosineProblem(7, 0, 1, 0))
        self.assertAlmostEqual(value, -2.2469796037, places=9)
        self.assertEqual(weights, [0, 0, 1, 1, 1, 1, 0])
        value, weights = minimize_weighted_cosine(
            ExtremalCosineProblem(7, 0, 1, 7))
        self.assertAlmostEqual(value, 0, places=12)
        self.assertEqual(weights, [1] * 7)

    def test_greedy_meets_mass(self):
        prob = ExtremalCosineProblem.from_constant(10, 13, 0)
        _, weights = minimize_weighted_cosine(prob)
        self.assertGreaterEqual(sum(weights), prob.mass)
        self.assertTrue(all(0 <= w <= prob.cap for w in weights))

    def test_infeasible(self):
        prob = ExtremalCosineProblem(5, 0, Fraction(1, 5), 2)
        self.assertFalse(prob.is_feasible)
        for solve in (minimize_weighted_cosine, solve_weighted_cosine_lp,
                      enumerate_weighted_cosine):
            with self.assertRaises(LabError) as ctx:
                solve(prob)
            self.assertEqual(ctx.exception.errorcode, ErrorCode.INFEASIBLE)

    def test_enumeration_limit(self):
        with self.assertRaises(LabError) as ctx:
            enumerate_weighted_cosine(ExtremalCosineProblem(17, 0, 1, 0))
        self.assertEqual(ctx.exception.errorcode, ErrorCode.LIMITEXCEEDED)

    def test_oracles_agree(self):
        rng = seeded(71)

        def agree(prob):
            greedy, _ = minimize_weighted_cosine(prob)
            lp, _ = solve_weighted_cosine_lp(prob)
            vertex, _ = enumerate_weighted_cosine(prob)
            return abs(greedy - lp) <= 1e-9 and abs(greedy - vertex) <= 1e-9

        check_unittest(self, agree, gen_problem(rng, 10), target=60)

    def test_lp_large_q(self):
        for q in (31, 61, 97):
            prob = ExtremalCosineProblem.from_constant(10, q, 1)
            greedy, _ = minimize_weighted_cosine(prob)
            lp, _ = solve_weighted_cosine_lp(prob)
            self.assertAlmostEqual(greedy, lp, places=9)


class TestCosineStep(unittest.TestCase):
    def test_values(self):
        values = cosine_step_values(4)
        self.assertEqual(len(values), 5)
        self.assertAlmostEqual(values[0], -1)
        self.assertAlmostEqual(values[2], 0)
        self.assertAlmostEqual(values[4], 1)

    def test_monotone(self):
        for q in range(1, 102):
            self.assertTrue(check_cosine_step_monotone(q), q)


if __name__ == '__main__':
    unittest.main()
