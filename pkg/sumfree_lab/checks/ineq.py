"""
The coset inequalities along one character gamma of order q, with
s = n/q the coset size and c_j = |F_j|:

- triple lower bound: at least c_l (c_j + c_{j+l} - s) ordered triples
  have x in F_l, y in F_j, x + y in F_{j+l};
- alpha_l bound: alpha_j + alpha_{j+l} <= 1 + delta q^2 / alpha_l;
- L(t) bound: the alpha_i with alpha_i + alpha_{2i} >= 1 + t sum to at
  most delta q^2 / t.

All comparisons are exact.
"""
from __future__ import absolute_import, division, print_function
from fractions import Fraction

from builtins import *  # @UnusedWildImport

from sumfree_lab.checks.cosets import (coset_triple_matrix, make_report,
                                       report_context)
from sumfree_lab.enums import CheckName, ErrorCode
from sumfree_lab.errors import check_arg


def _triple_lhs(counts, size, l, j, q):
    return max(0, counts[l] * (counts[j] + counts[(j + l) % q] - size))


def triple_lower_bound_slack(profile, matrix, l, j):
    """Returns (rhs - lhs) / s^2 of the triple lower bound as a float."""
    q = profile.q
    size = profile.coset_size
    lhs = _triple_lhs(profile.part_counts, size, l % q, j % q, q)
    return (matrix[l % q][j % q] - lhs) / (size * size)


def check_triple_lower_bound(subset, profile, l, j, matrix=None,
                             table=None):
    """Compares max(0, |F_l| (|F_j| + |F_{j+l}| - n/q)) with the number of
    ordered Schur triples x + y = z, x in F_l, y in F_j, z in F_{j+l}.

    Parameters
    ----------
    subset : Subset
        F
    profile : CosetProfile
        The profile of F along gamma
    l, j : int
        Coset indices, reduced mod q
    matrix : list of list of int, optional
        The output of :func:`~sumfree_lab.checks.cosets.coset_triple_matrix`

    Returns
    -------
    BoundReport
    """
    q = profile.q
    l %= q
    j %= q
    if matrix is None:
        matrix = coset_triple_matrix(subset, profile, table)
    lhs = _triple_lhs(profile.part_counts, profile.coset_size, l, j, q)
    rhs = matrix[l][j]
    context = report_context(subset, profile.character,
                             [('l', l), ('j', j)])
    return make_report(CheckName.TRIPLE_LOWER_BOUND, lhs, rhs, lhs <= rhs,
                       context)


def alphal_slack(profile, triple_count, l, j):
    """Returns the rhs - lhs of the alpha_l bound as a float; None when
    alpha_l = 0.

    With T = delta n^2 the bound reads (c_j + c_{j+l} - s) c_l <= T.
    """
    q = profile.q
    counts = profile.part_counts
    size = profile.coset_size
    l %= q
    j %= q
    if not counts[l]:
        return None
    excess = (counts[j] + counts[(j + l) % q] - size) * counts[l]
    return (triple_count - excess) / (size * counts[l])


def check_alphal_pair(profile, delta, l, j):
    """Checks alpha_j + alpha_{j+l} <= 1 + delta q^2 / alpha_l for one
    pair; alpha_l must be positive."""
    q = profile.q
    l %= q
    j %= q
    alphas = profile.alphas
    check_arg(alphas[l] > 0, ErrorCode.BADPARAMETER,
              "alpha_%d is zero" % l)
    delta = Fraction(delta)
    lhs = alphas[j] + alphas[(j + l) % q]
    rhs = 1 + delta * q * q / alphas[l]
    context = report_context(profile.subset, profile.character,
                             [('l', l), ('j', j), ('delta', delta)])
    return make_report(CheckName.ALPHAL, lhs, rhs, lhs <= rhs, context)


def check_alphal(profile, delta):
    """Checks the alpha_l bound for every l with alpha_l > 0 and every j.

    Parameters
    ----------
    profile : CosetProfile
    delta : Fraction
        The exact delta of F

    Returns
    -------
    list of BoundReport
        Empty when F is empty
    """
    q = profile.q
    counts = profile.part_counts
    return [check_alphal_pair(profile, delta, l, j)
            for l in range(q) if counts[l] for j in range(q)]


def large_pair_indices(profile, t):
    """Returns L(t) = {i : alpha_i + alpha_{2i} >= 1 + t}, indices mod q."""
    q = profile.q
    alphas = profile.alphas
    return [i for i in range(q) if alphas[i] + alphas[(2 * i) % q] >= 1 + t]


def check_Lt(profile, t, delta):
    """Checks sum over i in L(t) of alpha_i <= delta q^2 / t.

    Parameters
    ----------
    profile : CosetProfile
    t : Fraction
        Positive threshold
    delta : Fraction
        The exact delta of F

    Returns
    -------
    BoundReport
    """
    t = Fraction(t)
    check_arg(t > 0, ErrorCode.BADPARAMETER, "t = %s" % t)
    delta = Fraction(delta)
    q = profile.q
    alphas = profile.alphas
    lhs = sum((alphas[i] for i in large_pair_indices(profile, t)),
              Fraction(0))
    rhs = delta * q * q / t
    context = report_context(profile.subset, profile.character,
                             [('t', t), ('delta', delta)])
    return make_report(CheckName.LT, lhs, rhs, lhs <= rhs, context)
