from __future__ import absolute_import, division, print_function
import math
from fractions import Fraction

from builtins import *  # @UnusedWildImport

from sumfree_lab.checks.cosets import (make_report, middle_pairs,
                                       report_context)
from sumfree_lab.enums import CheckName, ErrorCode
from sumfree_lab.errors import check_arg

_TOLERANCE = 1e-9


def middle_sum_applies(q):  # -> bool
    return q % 6 == 1 and q >= 7


def check_middle_pairing(q):
    """Returns True iff k+1..5k splits into 2k disjoint pairs (i, 2i)."""
    pairs = middle_pairs(q)
    return len(pairs) == 2 * ((q - 1) // 6)


def check_middle_sum(profile, delta):
    """Checks sum over i = k+1..5k of alpha_i <= 2k + 2 delta^1/2 q^3/2 for
    a character of order q = 6k + 1.

    The comparison is exact: with d = lhs - 2k it holds iff d <= 0 or
    d^2 <= 4 delta q^3. The float rhs is reported, and lhs <= rhs + 1e-9 is
    also accepted.

    Parameters
    ----------
    profile : CosetProfile
    delta : Fraction
        The exact delta of F

    Returns
    -------
    BoundReport
    """
    q = profile.q
    check_arg(middle_sum_applies(q), ErrorCode.BADMODULUS,
              "q = %d is not 1 mod 6" % q)
    delta = Fraction(delta)
    k = (q - 1) // 6
    alphas = profile.alphas
    lhs = sum((alphas[i] for i in range(k + 1, 5 * k + 1)), Fraction(0))
    rhs = 2 * k + 2 * math.sqrt(delta) * q ** 1.5
    excess = lhs - 2 * k
    holds = (excess <= 0 or excess * excess <= 4 * delta * q ** 3
             or float(lhs) <= rhs + _TOLERANCE)
    context = report_context(profile.subset, profile.character,
                             [('delta', delta)])
    return make_report(CheckName.MIDDLE_SUM, lhs, rhs, holds, context)
