"""
Checks along the special direction gamma_s, the nontrivial character that
minimizes Re F^(gamma).
"""
from __future__ import absolute_import, division, print_function
import math
from fractions import Fraction

from builtins import *  # @UnusedWildImport

from sumfree_lab.checks.cosets import (coset_profile, edge_indices,
                                       make_report, report_context)
from sumfree_lab.enums import CheckName, ErrorCode, GroupTypeTag
from sumfree_lab.errors import LabError, check_arg
from sumfree_lab.fourier import (DIRECT, schur_count_bruteforce,
                                 special_direction)
from sumfree_lab.groups import classify, make_group, mu

_SPECIAL_TOLERANCE = 1e-6
_COSINE_TOLERANCE = 1e-9


def _delta_of(subset, stats):
    if stats is None:
        stats = schur_count_bruteforce(subset)
    return stats.delta


def _direction(subset, backend, table, direction):
    if direction is None:
        direction = special_direction(subset, backend, table)
    return direction


def check_special_direction_bound(subset, backend=DIRECT, table=None,
                                  stats=None, direction=None):
    """Checks Re F^(gamma_s) <= (delta - alpha^3) n / (alpha (1 - alpha)).

    The inequality follows from the Schur identity, since the weights
    |F^(gamma)|^2 over nontrivial gamma sum to n |F| - |F|^2.

    Parameters
    ----------
    subset : Subset
        A nonempty proper subset F
    backend : str
        Fourier backend used to find gamma_s
    table : CharacterTable, optional
    stats : SchurStats, optional
        The brute-force Schur statistics of F, if already known
    direction : (Character, float), optional
        The output of :func:`~sumfree_lab.fourier.special_direction`

    Returns
    -------
    BoundReport
        lhs is a float, rhs an exact Fraction
    """
    group = subset.owner
    check_arg(group.order >= 2, ErrorCode.TRIVIALGROUP, "special direction")
    alpha = subset.density
    if alpha == 0 or alpha == 1:
        raise LabError(ErrorCode.DEGENERATEDENSITY, "alpha = %s" % alpha)
    delta = _delta_of(subset, stats)
    character, lhs = _direction(subset, backend, table, direction)
    n = group.order
    rhs = (delta - alpha ** 3) * n / (alpha * (1 - alpha))
    holds = lhs <= float(rhs) + _SPECIAL_TOLERANCE * n
    context = report_context(subset, character)
    return make_report(CheckName.SPECIAL_DIRECTION, lhs, rhs, holds, context)


def _not_applicable(check_name, subset, character, params):
    return make_report(check_name, None, None, None,
                       report_context(subset, character, params))


def check_cosine_sum(subset, constants, backend=DIRECT, table=None,
                     stats=None, direction=None):
    """Checks q^-1 sum_j alpha_j cos(2 pi j / q) + mu_q^2 / (1 - mu_q)
    < 6 delta along gamma_s of order q, with mu_q = mu(Z/qZ).

    Applies to type III groups when |F| >= mu(G) n and
    delta <= constants.eta / 5; otherwise the report has holds = None.
    The strict comparison is taken with a 1e-9 tolerance. The check is
    report-only.

    Returns
    -------
    BoundReport
    """
    group = subset.owner
    params = [('eta', constants.eta)]
    if group.order < 2:
        return _not_applicable(CheckName.COSINE_SUM, subset, None, params)
    delta = _delta_of(subset, stats)
    character, _ = _direction(subset, backend, table, direction)
    if (classify(group).tag != GroupTypeTag.TYPE_III
            or subset.density < mu(group)
            or delta > Fraction(constants.eta) / 5):
        return _not_applicable(CheckName.COSINE_SUM, subset, character,
                               params)
    q = character.order
    profile = coset_profile(subset, character)
    mu_q = mu(make_group([q]))
    cosine_mean = sum(float(alpha) * math.cos(2 * math.pi * j / q)
                      for j, alpha in enumerate(profile.alphas)) / q
    lhs = cosine_mean + float(mu_q ** 2 / (1 - mu_q))
    rhs = 6 * delta
    holds = lhs < float(rhs) + _COSINE_TOLERANCE
    return make_report(CheckName.COSINE_SUM, lhs, rhs, holds,
                       report_context(subset, character, params))


def check_sord(subset, constants, indices=None, backend=DIRECT, table=None,
               stats=None, direction=None):
    """Checks alpha_i <= 64 delta^1/3 q^2/3 along gamma_s for the indices
    given (default {0..k} and {5k+1..6k}, q = 6k + 1).

    Applies to type III groups with |F| > mu(G) n, delta^1/3 m < 1,
    q <= constants.q0 and delta <= constants.eta_sord / q^5. Compared
    exactly as max alpha_i^3 <= 64^3 delta q^2. Report-only.
    """
    group = subset.owner
    params = [('eta_sord', constants.eta_sord), ('q0', constants.q0)]
    if indices is not None:
        indices = sorted(set(indices))
        params.append(('indices', indices))
    if (group.order < 2 or classify(group).tag != GroupTypeTag.TYPE_III
            or subset.density <= mu(group)):
        return _not_applicable(CheckName.SORD, subset, None, params)
    delta = _delta_of(subset, stats)
    character, _ = _direction(subset, backend, table, direction)
    q = character.order
    m = group.exponent
    if (delta * m ** 3 >= 1 or q > constants.q0
            or delta > Fraction(constants.eta_sord) / q ** 5):
        return _not_applicable(CheckName.SORD, subset, character, params)
    if indices is None:
        indices = edge_indices(q)
    profile = coset_profile(subset, character)
    alphas = profile.alphas
    lhs = max([alphas[i % q] for i in indices] or [Fraction(0)])
    rhs = 64 * float(delta) ** (1.0 / 3) * q ** (2.0 / 3)
    holds = lhs ** 3 <= 64 ** 3 * delta * q * q
    return make_report(CheckName.SORD, lhs, rhs, holds,
                       report_context(subset, character, params))
