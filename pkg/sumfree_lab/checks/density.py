from __future__ import absolute_import, division, print_function
from fractions import Fraction

from builtins import *  # @UnusedWildImport

from sumfree_lab.checks.cosets import make_report, report_context
from sumfree_lab.config import ConstantsConfig
from sumfree_lab.enums import CheckName, GroupTypeTag
from sumfree_lab.fourier import schur_count_bruteforce
from sumfree_lab.groups import classify, mu


def _cube_root(value):  # -> float
    return float(value) ** (1.0 / 3)


def _within(excess, factor, delta):
    # excess <= factor * delta^1/3, compared by cubing
    return excess <= 0 or excess ** 3 <= factor ** 3 * delta


def check_12ml(subset, delta):
    """alpha <= max(1/3, mu(G) + 3 delta^1/3)."""
    group = subset.owner
    alpha = subset.density
    mu_value = mu(group)
    rhs = max(1.0 / 3, float(mu_value) + 3 * _cube_root(delta))
    holds = alpha <= Fraction(1, 3) or _within(alpha - mu_value, 3, delta)
    return make_report(CheckName.DENSITY_12ML, alpha, rhs, holds,
                       report_context(subset, params=[('delta', delta)]))


def check_lm_item1(subset, delta):
    """Type III: alpha <= mu(G) + 1/(3m) + 3 delta^1/3."""
    group = subset.owner
    alpha = subset.density
    shift = mu(group) + Fraction(1, 3 * group.exponent)
    rhs = float(shift) + 3 * _cube_root(delta)
    holds = _within(alpha - shift, 3, delta)
    return make_report(CheckName.LM_ITEM1, alpha, rhs, holds,
                       report_context(subset, params=[('delta', delta)]))


def check_lm_item2(subset, delta):
    """Type III with delta^1/3 m >= 1: alpha <= mu(G) + 4 delta^1/3."""
    alpha = subset.density
    mu_value = mu(subset.owner)
    rhs = float(mu_value) + 4 * _cube_root(delta)
    holds = _within(alpha - mu_value, 4, delta)
    return make_report(CheckName.LM_ITEM2, alpha, rhs, holds,
                       report_context(subset, params=[('delta', delta)]))


def check_bgschf(subset, delta, C):
    """alpha <= mu(G) + C delta^1/3, report-only."""
    alpha = subset.density
    mu_value = mu(subset.owner)
    rhs = float(mu_value) + C * _cube_root(delta)
    holds = _within(alpha - mu_value, Fraction(C), delta)
    return make_report(CheckName.BGSCHF, alpha, rhs, holds,
                       report_context(subset, params=[('delta', delta),
                                                      ('C', C)]))


def check_density_theorems(subset, constants=None, stats=None):
    """Checks the density bounds of F against mu(G):

    ============  ==============================  ===========
    density_12ml  alpha <= max(1/3, mu + 3d)      all groups
    lm_item1      alpha <= mu + 1/(3m) + 3d       type III
    lm_item2      alpha <= mu + 4d                type III, d m >= 1
    bgschf        alpha <= mu + C d               report-only
    ============  ==============================  ===========

    with d = delta^1/3 and C = constants.C_empirical. Comparisons are exact.

    Parameters
    ----------
    subset : Subset
    constants : ConstantsConfig, optional
    stats : SchurStats, optional
        The brute-force Schur statistics of F, if already known

    Returns
    -------
    list of BoundReport
        Empty on the trivial group
    """
    group = subset.owner
    if group.order < 2:
        return []
    if constants is None:
        constants = ConstantsConfig()
    if stats is None:
        stats = schur_count_bruteforce(subset)
    delta = stats.delta
    reports = [check_12ml(subset, delta)]
    if classify(group).tag == GroupTypeTag.TYPE_III:
        reports.append(check_lm_item1(subset, delta))
        if delta * group.exponent ** 3 >= 1:
            reports.append(check_lm_item2(subset, delta))
    reports.append(check_bgschf(subset, delta, constants.C_empirical))
    return reports
