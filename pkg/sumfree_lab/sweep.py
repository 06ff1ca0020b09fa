# -*- coding: UTF-8 -*-

"""
Verification sweeps: every abelian group up to an order bound, exhaustive or
seeded random subsets, every enabled check over the nontrivial characters.
"""
from __future__ import absolute_import, division, print_function
import collections
import hashlib
import logging
import math
import random
import struct
from fractions import Fraction
from multiprocessing import Pool

from builtins import *  # @UnusedWildImport

from sumfree_lab import checks
from sumfree_lab.checks.ineq import alphal_slack, triple_lower_bound_slack
from sumfree_lab.checks.middle_sum import middle_sum_applies
from sumfree_lab.config import RNG_ALGORITHM
from sumfree_lab.enums import CheckName, EmitMode
from sumfree_lab.groups import (enumerate_groups, format_group_spec,
                                make_group, mu)
from sumfree_lab.report import is_hard_failure, sort_reports
from sumfree_lab.structs import Subset

logger = logging.getLogger(__name__)

_EXHAUSTIVE_BATCH = 512
_SAMPLE_BATCH = 16

SweepResult = collections.namedtuple(
    "SweepResult", "reports subset_count hard_failures")


def item_seed(rng_seed, group, sample):
    """Returns the seed of one sample: the first 8 bytes of
    sha256("<rng>:<seed>:<group>:<sample>") read big-endian."""
    key = "%s:%d:%s:%d" % (RNG_ALGORITHM, rng_seed, group, sample)
    digest = hashlib.sha256(key.encode('ascii')).digest()
    return struct.unpack('>Q', digest[:8])[0]


def sample_probability(group, sample):
    """Inclusion probability of a random subset; cycles through 0.1, 0.3,
    0.5 and mu(G)."""
    cycle = (0.1, 0.3, 0.5)
    index = sample % 4
    if index < 3:
        return cycle[index]
    return float(mu(group))


def random_subset(group, rng, p):
    """Includes each element independently with probability p."""
    mask = 0
    for x in range(group.order):
        if rng.random() < p:
            mask |= 1 << x
    return Subset(group, mask)


def select_characters(group, rng, char_budget):
    """Returns the nontrivial character ranks to check: all of them, or a
    seeded sample when n (n - 1) evaluations exceed the budget."""
    n = group.order
    ranks = list(range(1, n))
    if n * (n - 1) <= char_budget:
        return ranks
    count = max(1, char_budget // n)
    return sorted(rng.sample(ranks, count))


class _Worst(object):
    """Keeps the candidate of least margin, failing candidates first."""

    def __init__(self):
        self._key = None
        self.args = None

    def offer(self, failed, margin, args):
        key = (not failed, margin)
        if self._key is None or key < self._key:
            self._key = key
            self.args = args


def _character_reports(info, cfg, character_ranks):
    subset = info.subset
    table = info.tables.characters
    triple_count = info.schur_stats.ordered_triple_count
    delta = info.delta
    triple = _Worst()
    alphal = _Worst()
    lt = _Worst()
    middle = _Worst()
    for rank in character_ranks:
        character = table.character(rank)
        profile = info.get_profile(character)
        q = profile.q
        if cfg.is_enabled(CheckName.TRIPLE_LOWER_BOUND):
            matrix = info.get_triple_matrix(character)
            for l in range(q):
                for j in range(q):
                    slack = triple_lower_bound_slack(profile, matrix, l, j)
                    triple.offer(slack < 0, slack, (profile, matrix, l, j))
        if cfg.is_enabled(CheckName.ALPHAL):
            for l in range(q):
                for j in range(q):
                    slack = alphal_slack(profile, triple_count, l, j)
                    if slack is not None:
                        alphal.offer(slack < 0, slack, (profile, l, j))
        if cfg.is_enabled(CheckName.LT):
            for t in lt_thresholds(delta, q):
                report = checks.check_Lt(profile, t, delta)
                lt.offer(not report.holds,
                         float(report.rhs) - float(report.lhs), report)
        if cfg.is_enabled(CheckName.MIDDLE_SUM) and middle_sum_applies(q):
            report = checks.check_middle_sum(profile, delta)
            middle.offer(not report.holds, report.rhs - float(report.lhs),
                         report)

    reports = []
    if triple.args is not None:
        profile, matrix, l, j = triple.args
        reports.append(checks.check_triple_lower_bound(subset, profile, l, j,
                                                       matrix))
    if alphal.args is not None:
        profile, l, j = alphal.args
        reports.append(checks.check_alphal_pair(profile, delta, l, j))
    reports.extend(worst.args for worst in (lt, middle)
                   if worst.args is not None)
    return reports


def lt_thresholds(delta, q):
    """The thresholds t used for the L(t) bound: 1/2 and, for delta > 0,
    (delta q)^1/2 as an exact Fraction of its float value."""
    thresholds = [Fraction(1, 2)]
    if delta > 0:
        thresholds.append(Fraction(math.sqrt(delta * q)))
    return thresholds


def subset_reports(info, cfg, character_ranks):
    """Runs the enabled checks on one subset. Per-character checks report
    their worst case over all characters and parameters.

    Parameters
    ----------
    info : SubsetInfo
    cfg : SweepConfig
    character_ranks : list of int
        Ranks of the nontrivial characters to check

    Returns
    -------
    list of BoundReport
    """
    subset = info.subset
    group = subset.owner
    constants = cfg.constants
    stats = info.schur_stats
    reports = []
    if cfg.is_enabled(CheckName.BACKEND_AGREEMENT):
        reports.append(checks.check_backend_agreement(
            subset, info.tables.addition, info.tables.characters, stats))
    if group.order < 2:
        return reports
    reports.extend(report for report in
                   checks.check_density_theorems(subset, constants, stats)
                   if cfg.is_enabled(report.check_name))
    direction = info.special_direction
    proper = 0 < subset.size < group.order
    if cfg.is_enabled(CheckName.SPECIAL_DIRECTION) and proper:
        reports.append(checks.check_special_direction_bound(
            subset, stats=stats, direction=direction))
    if cfg.is_enabled(CheckName.COSINE_SUM):
        reports.append(checks.check_cosine_sum(subset, constants,
                                               stats=stats,
                                               direction=direction))
    if cfg.is_enabled(CheckName.SORD):
        reports.append(checks.check_sord(subset, constants, stats=stats,
                                         direction=direction))
    reports.extend(_character_reports(info, cfg, character_ranks))
    return reports


def _work_items(cfg):
    for group in enumerate_groups(cfg.max_order):
        n = group.order
        if n <= cfg.exhaustive_limit:
            samples = list(range(1 << n))
            batch = _EXHAUSTIVE_BATCH
            exhaustive = True
        else:
            samples = list(range(cfg.samples_per_group))
            batch = _SAMPLE_BATCH
            exhaustive = False
        for start in range(0, len(samples), batch):
            yield (group.invariant_factors, exhaustive,
                   samples[start:start + batch], cfg)


def run_item(item):
    """Processes one work item: a group, a batch of sample numbers and the
    sweep settings. For exhaustive groups the sample number is the subset
    mask."""
    factors, exhaustive, samples, cfg = item
    group = make_group(list(factors))
    tables = checks.GroupTables(group)
    reports = []
    for sample in samples:
        rng = random.Random(item_seed(cfg.rng_seed, group, sample))
        if exhaustive:
            subset = Subset(group, sample)
        else:
            subset = random_subset(group, rng,
                                   sample_probability(group, sample))
        info = checks.SubsetInfo(subset, tables)
        ranks = select_characters(group, rng, cfg.char_budget)
        reports.extend(subset_reports(info, cfg, ranks))
    return format_group_spec(group), len(samples), reports


def run_sweep(cfg):
    """Runs a sweep and returns the sorted reports.

    Work items are independent and each seeds its own generator from the
    root seed, so the output does not depend on cfg.workers.

    Returns
    -------
    SweepResult
    """
    items = list(_work_items(cfg))
    if cfg.workers > 1:
        pool = Pool(cfg.workers)
        try:
            results = pool.map(run_item, items, chunksize=1)
        finally:
            pool.close()
            pool.join()
    else:
        results = [run_item(item) for item in items]

    per_group = collections.OrderedDict()
    reports = []
    subset_count = 0
    for group_spec, count, item_reports in results:
        subsets, failures = per_group.get(group_spec, (0, 0))
        per_group[group_spec] = (
            subsets + count,
            failures + sum(1 for r in item_reports if is_hard_failure(r)))
        subset_count += count
        reports.extend(item_reports)
    for group_spec, (subsets, failures) in per_group.items():
        logger.info("group %s: %d subsets, %d hard failures", group_spec,
                    subsets, failures)

    hard_failures = sum(1 for r in reports if is_hard_failure(r))
    if cfg.emit == EmitMode.FAILURES:
        reports = [r for r in reports if r.holds is False]
    return SweepResult(sort_reports(reports), subset_count, hard_failures)
