# -*- coding: UTF-8 -*-

"""
Exact enumeration of sum-free sets: deciding sum-freeness, counting
|SF(G)| (hence sigma(G)) and finding a largest sum-free subset.
"""
from __future__ import absolute_import, division, print_function
import logging
import math
from multiprocessing import Pool

from builtins import *  # @UnusedWildImport

from sumfree_lab.config import get_limits
from sumfree_lab.enums import ErrorCode
from sumfree_lab.errors import LabError, check_arg
from sumfree_lab.groups import (addition_table, make_group, mu,
                                negation_table)
from sumfree_lab.structs import SumFreeCensus, Subset, iter_bits, popcount

logger = logging.getLogger(__name__)

_NAIVE_LIMIT = 20


def is_sumfree(subset, table=None):
    """Returns True iff there are no x, y in F (x = y allowed) with x + y in
    F. Any set containing 0 fails since 0 + 0 = 0.

    Parameters
    ----------
    subset : Subset
    table : list of list of int, optional
        The addition table of the owner group
    """
    if table is None:
        table = addition_table(subset.owner)
    mask = subset.mask
    members = subset.elements
    for x in members:
        row = table[x]
        for y in members:
            if (mask >> row[y]) & 1:
                return False
    return True


class _SearchTables:
    """Rank-indexed tables shared by the backtracking searches."""
    def __init__(self, group):
        n = group.order
        self.order = n
        self.add = addition_table(group)
        self.neg = negation_table(group)
        # halves[x]: the w with w + w = x
        self.halves = [0] * n
        for w in range(n):
            self.halves[self.add[w][w]] |= 1 << w

    def conflicts(self, x, chosen):
        """Elements that can no longer join chosen once x is added: the
        sums x + c, the differences c - x and x - c, the halves of x and
        x itself."""
        add = self.add
        row = add[x]
        neg = self.neg
        neg_x = neg[x]
        extra = (1 << x) | (1 << row[x]) | self.halves[x]
        for c in iter_bits(chosen):
            extra |= (1 << row[c]) | (1 << add[c][neg_x]) | (1 << row[neg[c]])
        return extra


def _check_limit(group, limit, what):
    check_arg(group.order <= limit, ErrorCode.LIMITEXCEEDED,
              "%s of order %d above %s limit %d"
              % (group, group.order, what, limit))


class _Counter:
    def __init__(self, tables, debug=False):
        self.tables = tables
        self.debug = debug
        self.nodes = 0
        self._add = tables.add

    def count_below(self, chosen, forbidden, upper):
        # Candidates are taken in descending rank order below upper
        self.nodes += 1
        if self.debug:
            self._check_node(chosen)
        total = 1
        avail = ~forbidden & ((1 << upper) - 1) & ~1
        while avail:
            x = avail.bit_length() - 1
            avail ^= 1 << x
            extra = self.tables.conflicts(x, chosen)
            total += self.count_below(chosen | (1 << x), forbidden | extra, x)
        return total

    def _check_node(self, chosen):
        members = list(iter_bits(chosen))
        for x in members:
            for y in members:
                if (chosen >> self._add[x][y]) & 1:
                    raise LabError(ErrorCode.INCONSISTENT,
                                   "enumerated set %#x is not sum-free"
                                   % chosen)


def _count_branch(args):
    factors, x, debug = args
    group = make_group(list(factors))
    tables = _SearchTables(group)
    counter = _Counter(tables, debug)
    extra = tables.conflicts(x, 0)
    return counter.count_below(1 << x, 1 | extra, x), counter.nodes


def count_sumfree(group, workers=1, debug=False, limit=None):
    """Returns |SF(G)|, the number of sum-free subsets, the empty set
    included.

    Elements are tried in descending rank order; the search state is the
    chosen set and the mask of elements that would create a Schur triple
    with it.

    Parameters
    ----------
    group : AbelianGroup
    workers : int, optional
        When above 1, the first-level subtrees are counted in a process pool
    debug : bool, optional
        Check every enumerated set for sum-freeness
    limit : int, optional
        Largest order accepted; defaults to the configured count limit

    Returns
    -------
    int
    """
    if limit is None:
        limit = get_limits().count_limit
    _check_limit(group, limit, "count")
    n = group.order
    roots = list(reversed(range(1, n)))
    if workers > 1 and len(roots) > 1:
        args = [(group.invariant_factors, x, debug) for x in roots]
        pool = Pool(workers)
        try:
            results = pool.map(_count_branch, args)
        finally:
            pool.close()
            pool.join()
    else:
        results = [_count_branch((group.invariant_factors, x, debug))
                   for x in roots]
    total = 1 + sum(count for count, _ in results)
    logger.debug("count_sumfree %s: %d sets, %d nodes", group, total,
                 sum(nodes for _, nodes in results))
    return total


def count_sumfree_naive(group):
    """Returns |SF(G)| by testing all 2^n subsets (n <= 20)."""
    _check_limit(group, _NAIVE_LIMIT, "naive count")
    table = addition_table(group)
    total = 0
    for mask in range(1 << group.order):
        if mask & 1:
            continue
        if is_sumfree(Subset(group, mask), table):
            total += 1
    return total


def _log2(value):
    bits = value.bit_length()
    shift = max(0, bits - 53)
    try:
        return shift + math.log2(value >> shift)
    except AttributeError:
        return shift + math.log(value >> shift, 2)


def sigma(group, workers=1, limit=None):
    """Returns sigma(G) = log2(|SF(G)|) / n.

    The logarithm is taken of the exact count, from its bit length plus a
    floating correction for the leading bits.
    """
    count = count_sumfree(group, workers=workers, limit=limit)
    return sigma_from_count(group, count)


def sigma_from_count(group, count):  # -> float
    return _log2(count) / group.order


class _MaxSearch:
    def __init__(self, tables):
        self.tables = tables
        self.cap = tables.order // 2
        self.best_size = 0
        self.best_mask = 0
        self.nodes = 0

    def search(self, chosen, size, forbidden, upper):
        self.nodes += 1
        if size > self.best_size:
            self.best_size = size
            self.best_mask = chosen
        avail = ~forbidden & ((1 << upper) - 1) & ~1
        while avail:
            # A sum-free A is disjoint from A + a, so |A| <= n / 2
            bound = min(size + popcount(avail), self.cap)
            if bound <= self.best_size:
                return
            x = avail.bit_length() - 1
            avail ^= 1 << x
            extra = self.tables.conflicts(x, chosen)
            self.search(chosen | (1 << x), size + 1, forbidden | extra, x)


def max_sumfree(group, limit=None):
    """Returns the size of a largest sum-free subset and one witness.

    Branch and bound over elements in descending rank order with bound
    |chosen| + |remaining candidates|, capped at n / 2. Only strictly better
    sets replace the incumbent, so the witness is deterministic.

    Parameters
    ----------
    group : AbelianGroup
    limit : int, optional
        Largest order accepted; defaults to the configured search limit

    Returns
    -------
    (int, Subset)
    """
    if limit is None:
        limit = get_limits().search_limit
    _check_limit(group, limit, "search")
    tables = _SearchTables(group)
    searcher = _MaxSearch(tables)
    searcher.search(0, 0, 1, group.order)
    logger.debug("max_sumfree %s: size %d, %d nodes", group,
                 searcher.best_size, searcher.nodes)
    return searcher.best_size, Subset(group, searcher.best_mask)


def census(group, workers=1):
    """Returns the SumFreeCensus of the group: |SF(G)|, sigma(G), the
    maximum sum-free size with a witness and mu(G) from the formula.

    The census invariants (sigma >= mu, max size = mu n,
    |SF(G)| >= 2^max size, witness sum-free) are checked before returning;
    a violation raises a LabError with
    :const:`~sumfree_lab.enums.ErrorCode.INCONSISTENT`. On the trivial
    group mu_formula is None.
    """
    limits = get_limits()
    _check_limit(group, limits.count_limit, "count")
    _check_limit(group, limits.search_limit, "search")
    count = count_sumfree(group, workers=workers, limit=limits.count_limit)
    sigma_value = sigma_from_count(group, count)
    max_size, witness = max_sumfree(group, limit=limits.search_limit)
    mu_value = mu(group) if group.order >= 2 else None
    result = SumFreeCensus(group, count, sigma_value, max_size, witness,
                           mu_value)
    _check_census(result)
    return result


def _check_census(result):
    group = result.group
    problems = []
    if result.mu_formula is not None:
        if result.sigma < float(result.mu_formula) - 1e-12:
            problems.append("sigma below mu")
        if result.max_size != result.mu_formula * group.order:
            problems.append("max size %d != mu n" % result.max_size)
    if result.sf_count < 1 << result.max_size:
        problems.append("count below 2^max size")
    if not is_sumfree(result.witness):
        problems.append("witness not sum-free")
    if problems:
        raise LabError(ErrorCode.INCONSISTENT,
                       "census of %s: %s" % (group, "; ".join(problems)))
