# -*- coding: UTF-8 -*-

"""
Exact arithmetic and enumeration for finite abelian groups in invariant-factor
form, the type I(p) / II / III classification and the formula for mu(G).
"""
from __future__ import absolute_import, division, print_function
import collections
import functools
import itertools
import numbers
import operator
from fractions import Fraction
try:
    from itertools import zip_longest
except ImportError:
    from itertools import izip_longest as zip_longest

import numpy as np
from sympy import factorint, primefactors
from sympy.utilities.iterables import partitions
from builtins import *  # @UnusedWildImport

from sumfree_lab.enums import ErrorCode, GroupTypeTag
from sumfree_lab.errors import LabError, check_arg
from sumfree_lab.structs import AbelianGroup, GroupElement, GroupType


def _product(values):
    return functools.reduce(operator.mul, values, 1)


def _chain_from_prime_powers(columns):
    # columns: one descending list of prime powers per prime
    chain = [_product(row) for row in zip_longest(*columns, fillvalue=1)]
    return tuple(reversed(chain))


def make_group(factors):
    """Returns the canonical invariant-factor form of the direct product of
    the given cyclic groups.

    Parameters
    ----------
    factors : list of int
        The cyclic factors, each >= 2, in any order. An empty list gives the
        trivial group.

    Returns
    -------
    AbelianGroup
        The group with invariant factors m1 | m2 | ... | mr.

    Examples
    --------
    >>> make_group([6, 2]).invariant_factors
    (2, 6)
    >>> make_group([3, 2]).invariant_factors
    (6,)
    """
    prime_exponents = collections.defaultdict(list)
    for factor in factors:
        if isinstance(factor, bool) or not isinstance(factor,
                                                      numbers.Integral):
            raise LabError(ErrorCode.BADFACTOR, repr(factor))
        check_arg(factor >= 2, ErrorCode.BADFACTOR, str(factor))
        for p, e in factorint(int(factor)).items():
            prime_exponents[int(p)].append(int(e))

    columns = [[p ** e for e in sorted(exps, reverse=True)]
               for p, exps in sorted(prime_exponents.items())]
    return AbelianGroup(_chain_from_prime_powers(columns))


def parse_group_spec(text):
    """Parses a group spec such as "12" or "2,6". "1" and "" denote the
    trivial group and factors equal to 1 are dropped.

    Parameters
    ----------
    text : str
        Comma-separated cyclic factors

    Returns
    -------
    AbelianGroup
    """
    text = text.strip()
    if text in ('', '1'):
        return AbelianGroup(())
    factors = []
    for token in text.split(','):
        try:
            value = int(token.strip())
        except ValueError:
            raise LabError(ErrorCode.BADGROUPSPEC, repr(text))
        if value != 1:
            factors.append(value)
    return make_group(factors)


def format_group_spec(group):  # -> str
    return str(group)


def zero(group):  # -> GroupElement
    return GroupElement(group, (0,) * group.rank)


def element(group, coords):  # -> GroupElement
    return GroupElement(group, coords)


def element_from_rank(group, rank_index):  # -> GroupElement
    return GroupElement.from_rank(group, rank_index)


def elements(group):
    """Yields every element of the group in rank order."""
    for rank_index in range(group.order):
        yield GroupElement.from_rank(group, rank_index)


def parse_element(group, text):
    """Parses comma-separated coordinates such as "1,5"."""
    text = text.strip()
    if not text:
        return zero(group)
    try:
        coords = [int(token) for token in text.split(',')]
    except ValueError:
        raise LabError(ErrorCode.BADELEMENT, repr(text))
    return GroupElement(group, coords)


def _check_member(group, x):
    if x.group == group:
        return
    if x.group.rank != group.rank:
        raise LabError(ErrorCode.RANKMISMATCH,
                       "element of %s used in %s" % (x.group, group))
    raise LabError(ErrorCode.GROUPMISMATCH,
                   "element of %s used in %s" % (x.group, group))


def add(group, x, y):
    """Returns x + y, computed coordinatewise.

    Parameters
    ----------
    group : AbelianGroup
    x, y : GroupElement
        Elements of group

    Returns
    -------
    GroupElement
    """
    _check_member(group, x)
    _check_member(group, y)
    coords = [(a + b) % m for a, b, m in
              zip(x.coordinates, y.coordinates, group.invariant_factors)]
    return GroupElement(group, coords)


def neg(group, x):  # -> GroupElement
    _check_member(group, x)
    coords = [(-a) % m for a, m in zip(x.coordinates,
                                        group.invariant_factors)]
    return GroupElement(group, coords)


def element_coordinates(group):
    """Returns an (n, r) integer array whose row i holds the coordinates of
    the element with rank index i."""
    if group.rank == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grid = np.indices(group.invariant_factors, dtype=np.int64)
    return grid.reshape(group.rank, group.order).T


def _coords_to_ranks(group, coords):
    radix = np.array(group.radix, dtype=np.int64)
    if group.rank == 0:
        return np.zeros(coords.shape[:-1], dtype=np.int64)
    return coords.dot(radix)


def addition_table(group):
    """Returns the rank-indexed addition table as nested lists:
    table[x][y] is the rank index of x + y."""
    coords = element_coordinates(group)
    moduli = np.array(group.invariant_factors, dtype=np.int64)
    sums = (coords[:, None, :] + coords[None, :, :]) % moduli
    return _coords_to_ranks(group, sums).tolist()


def negation_table(group):
    """Returns a list whose entry x is the rank index of -x."""
    coords = element_coordinates(group)
    moduli = np.array(group.invariant_factors, dtype=np.int64)
    return _coords_to_ranks(group, (-coords) % moduli).tolist()


def classify(group):
    """Returns the type of the group.

    The group is type I(p) if some prime p = 2 (mod 3) divides n, with p the
    least such prime; type II if there is no such prime but 3 divides n;
    type III otherwise, which means every divisor of n is 1 (mod 3).

    Parameters
    ----------
    group : AbelianGroup

    Returns
    -------
    GroupType
    """
    n = group.order
    for p in primefactors(n):
        if p % 3 == 2:
            return GroupType(GroupTypeTag.TYPE_I, int(p))
    if n % 3 == 0:
        return GroupType(GroupTypeTag.TYPE_II, None)
    return GroupType(GroupTypeTag.TYPE_III, None)


def mu(group):
    """Returns mu(G), the density of a largest sum-free subset of G.

    ========  =====================
    I(p)      1/3 + 1/(3p)
    II        1/3
    III       1/3 - 1/(3m), m the exponent
    ========  =====================

    Parameters
    ----------
    group : AbelianGroup
        A nontrivial group; the trivial group has no nonempty sum-free
        subset and raises a LabError.

    Returns
    -------
    Fraction
    """
    check_arg(group.order >= 2, ErrorCode.TRIVIALGROUP, "mu")
    group_type = classify(group)
    if group_type.tag == GroupTypeTag.TYPE_I:
        return Fraction(1, 3) + Fraction(1, 3 * group_type.p)
    if group_type.tag == GroupTypeTag.TYPE_II:
        return Fraction(1, 3)
    return Fraction(1, 3) - Fraction(1, 3 * group.exponent)


def _partition_parts(exponent):
    for partition in partitions(exponent):
        parts = []
        for part, multiplicity in partition.items():
            parts.extend([part] * multiplicity)
        yield sorted(parts, reverse=True)


def groups_of_order(n):
    """Returns one AbelianGroup per isomorphism class of order n, sorted by
    invariant factors."""
    check_arg(n >= 1, ErrorCode.BADPARAMETER, "order %s" % n)
    per_prime = []
    for p, e in sorted(factorint(n).items()):
        per_prime.append([[int(p) ** part for part in parts]
                          for parts in _partition_parts(int(e))])
    chains = set()
    for columns in itertools.product(*per_prime):
        chains.add(_chain_from_prime_powers(columns))
    return [AbelianGroup(chain) for chain in sorted(chains)]


def enumerate_groups(max_order):
    """Yields one representative per isomorphism class of abelian groups of
    order <= max_order, by ascending order and then lexicographic invariant
    factors.

    Parameters
    ----------
    max_order : int
        Largest order to enumerate, >= 1
    """
    check_arg(max_order >= 1, ErrorCode.BADPARAMETER,
              "max_order %s" % max_order)
    for n in range(1, max_order + 1):
        for group in groups_of_order(n):
            yield group


def group_sort_key(group):  # -> tuple
    return (group.order, group.invariant_factors)
