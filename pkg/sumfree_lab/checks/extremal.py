# -*- coding: UTF-8 -*-

"""
The extremal weighted cosine problem: minimize

    sum over j in 0..q-1 of w_j cos((2j + l) pi / q)

subject to 0 <= w_j <= cap and sum of w_j >= mass. The objective is
separable, so a greedy fill is optimal; a linear-programming solve and a
vertex enumeration serve as independent oracles.
"""
from __future__ import absolute_import, division, print_function
import itertools
import math
from fractions import Fraction

import numpy as np
from scipy.optimize import linprog
from builtins import *  # @UnusedWildImport

from sumfree_lab.enums import ErrorCode
from sumfree_lab.errors import LabError, check_arg

# Coefficients this close to zero count as zero
_ZERO_COEFF = 1e-12
_ENUMERATION_LIMIT = 16


class ExtremalCosineProblem(object):
    """One instance of the weighted cosine minimization.

    Parameters
    ----------
    q : int
        Number of weights, >= 2
    l : int
        Phase offset, 0 <= l <= (q - 1) / 2
    cap : Fraction
        Per-weight capacity
    mass : Fraction
        Required total weight
    """
    def __init__(self, q, l, cap, mass):
        q = int(q)
        l = int(l)
        check_arg(q >= 2, ErrorCode.BADPARAMETER, "q = %d" % q)
        check_arg(0 <= l <= (q - 1) // 2, ErrorCode.BADPARAMETER,
                  "l = %d outside [0, %d]" % (l, (q - 1) // 2))
        cap = Fraction(cap)
        mass = Fraction(mass)
        check_arg(cap >= 0 and mass >= 0, ErrorCode.BADPARAMETER,
                  "cap and mass must be nonnegative")
        self._q = q
        self._l = l
        self._cap = cap
        self._mass = mass
        self._coeffs = tuple(math.cos((2 * j + l) * math.pi / q)
                             for j in range(q))

    @classmethod
    def from_constant(cls, c, q, l):
        """The instance of the extremal argument: cap = t_c / 2 with
        t_c = 1 + 1/c, mass = 2k for q = 6k + 1."""
        check_arg(q % 6 == 1, ErrorCode.BADMODULUS,
                  "q = %d is not 1 mod 6" % q)
        c = Fraction(c)
        check_arg(c > 0, ErrorCode.BADPARAMETER, "c = %s" % c)
        t_c = 1 + 1 / c
        return cls(q, l, t_c / 2, 2 * ((q - 1) // 6))

    @classmethod
    def from_config(cls, constants, q, l):
        """from_constant with c taken from a ConstantsConfig."""
        return cls.from_constant(Fraction(constants.c), q, l)

    @classmethod
    def canonical(cls, q, l, cap, mass):
        """Builds the instance for an arbitrary offset l.

        The coefficient multiset is unchanged by l -> -l (reindexing
        j -> -j, as for F and -F) and by l -> l + 2 (shifting j), so the
        optimum only depends on l mod 2q up to these moves. l is reduced
        mod 2q and reflected into [0, q]; if that lands above (q - 1) / 2
        it is replaced by its parity.

        Raises a LabError for q = 2 and odd l, which has no equivalent
        offset in range.
        """
        q = int(q)
        check_arg(q >= 2, ErrorCode.BADPARAMETER, "q = %d" % q)
        r = int(l) % (2 * q)
        if r > q:
            r = 2 * q - r
        if r > (q - 1) // 2:
            r %= 2
        check_arg(r <= (q - 1) // 2, ErrorCode.BADPARAMETER,
                  "no offset equivalent to l = %d for q = %d" % (l, q))
        return cls(q, r, cap, mass)

    @property
    def q(self):  # -> int
        return self._q

    @property
    def l(self):  # -> int
        return self._l

    @property
    def cap(self):  # -> Fraction
        return self._cap

    @property
    def mass(self):  # -> Fraction
        return self._mass

    @property
    def is_feasible(self):  # -> bool
        return self._cap * self._q >= self._mass

    def coefficients(self):  # -> list[float]
        return list(self._coeffs)

    def objective(self, weights):  # -> float
        return math.fsum(float(w) * c for w, c in zip(weights, self._coeffs))

    def __repr__(self):
        return "ExtremalCosineProblem(q=%d, l=%d, cap=%s, mass=%s)" % (
            self._q, self._l, self._cap, self._mass)


def _check_feasible(prob):
    if not prob.is_feasible:
        raise LabError(ErrorCode.INFEASIBLE,
                       "cap * q = %s < mass = %s"
                       % (prob.cap * prob.q, prob.mass))


def minimize_weighted_cosine(prob):
    """Solves the problem by greedy filling.

    Weights on strictly negative coefficients are saturated, most negative
    first. If the mass is still short, the smallest nonnegative coefficients
    are filled until it is met.

    Parameters
    ----------
    prob : ExtremalCosineProblem

    Returns
    -------
    (float, list of Fraction)
        The optimum and the weights
    """
    _check_feasible(prob)
    coeffs = prob.coefficients()
    order = sorted(range(prob.q), key=lambda j: (coeffs[j], j))
    weights = [Fraction(0)] * prob.q
    total = Fraction(0)
    for j in order:
        if coeffs[j] < -_ZERO_COEFF:
            weights[j] = prob.cap
            total += prob.cap
        elif total < prob.mass:
            weights[j] = min(prob.cap, prob.mass - total)
            total += weights[j]
    return prob.objective(weights), weights


def solve_weighted_cosine_lp(prob):
    """Solves the problem as a linear program with scipy's HiGHS solver.

    Returns
    -------
    (float, numpy.ndarray)
    """
    _check_feasible(prob)
    q = prob.q
    result = linprog(np.array(prob.coefficients()),
                     A_ub=-np.ones((1, q)), b_ub=np.array([-float(prob.mass)]),
                     bounds=[(0.0, float(prob.cap))] * q, method='highs-ds')
    if result.status != 0:
        raise LabError(ErrorCode.INFEASIBLE, result.message)
    return float(result.fun), result.x


def enumerate_weighted_cosine(prob):
    """Solves the problem by scanning the vertices of the feasible region:
    every weight at 0 or cap except at most one, which closes the mass.
    Limited to q <= 16.

    Returns
    -------
    (float, list of Fraction)
    """
    _check_feasible(prob)
    q = prob.q
    check_arg(q <= _ENUMERATION_LIMIT, ErrorCode.LIMITEXCEEDED,
              "vertex enumeration for q = %d" % q)
    cap = prob.cap
    best = None
    for pattern in itertools.product((0, 1), repeat=q):
        saturated = [cap if bit else Fraction(0) for bit in pattern]
        short = prob.mass - cap * sum(pattern)
        if short <= 0:
            candidates = [saturated]
        else:
            candidates = []
            if short <= cap:
                for j in range(q):
                    if not pattern[j]:
                        weights = list(saturated)
                        weights[j] = short
                        candidates.append(weights)
        for weights in candidates:
            value = prob.objective(weights)
            if best is None or value < best[0]:
                best = (value, weights)
    return best


def cosine_step_values(q):
    """Returns f(x) = cos((q + x) pi / q) for x = 0..q."""
    check_arg(q >= 1, ErrorCode.BADPARAMETER, "q = %d" % q)
    return [math.cos((q + x) * math.pi / q) for x in range(q + 1)]


def check_cosine_step_monotone(q):  # -> bool
    values = cosine_step_values(q)
    return all(a < b for a, b in zip(values, values[1:]))
