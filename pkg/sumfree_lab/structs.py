# -*- coding: UTF-8 -*-

from __future__ import absolute_import, division, print_function

import cmath
import collections
import math
from fractions import Fraction
try:
    from math import gcd
except ImportError:
    from fractions import gcd

from builtins import *  # @UnusedWildImport
from sumfree_lab.enums import ErrorCode, GroupTypeTag
from sumfree_lab.errors import LabError, check_arg


def lcm(a, b):
    return a // gcd(a, b) * b


def popcount(mask):
    return bin(mask).count('1')


def iter_bits(mask):
    """Yields the indices of the set bits of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class AbelianGroup(object):
    """A finite abelian group Z/m1 x ... x Z/mr in invariant-factor form.

    Instances are immutable. Use :func:`sumfree_lab.groups.make_group` to
    build a group from arbitrary cyclic factors; this constructor expects
    the canonical chain m1 | m2 | ... | mr.

    Attributes
    ----------
    invariant_factors : tuple of int
        The chain m1, ..., mr, each >= 2. Empty for the trivial group.
    order : int
        n, the product of the factors
    exponent : int
        m, the last factor (1 for the trivial group)
    rank : int
        r, the number of factors
    """
    __slots__ = ('_factors', '_order', '_radix')

    def __init__(self, invariant_factors):
        factors = tuple(int(f) for f in invariant_factors)
        for factor in factors:
            check_arg(factor >= 2, ErrorCode.BADFACTOR, str(factor))
        for small, large in zip(factors, factors[1:]):
            check_arg(large % small == 0, ErrorCode.BADFACTOR,
                      "%d does not divide %d" % (small, large))
        radix = []
        weight = 1
        for factor in reversed(factors):
            radix.append(weight)
            weight *= factor
        self._factors = factors
        self._order = weight
        # Mixed radix with m1 most significant
        self._radix = tuple(reversed(radix))

    @property
    def invariant_factors(self):  # -> tuple[int]
        return self._factors

    @property
    def order(self):  # -> int
        return self._order

    @property
    def exponent(self):  # -> int
        return self._factors[-1] if self._factors else 1

    @property
    def rank(self):  # -> int
        return len(self._factors)

    @property
    def radix(self):  # -> tuple[int]
        return self._radix

    def coordinates_of(self, rank_index):  # -> tuple[int]
        check_arg(0 <= rank_index < self._order, ErrorCode.BADELEMENT,
                  "rank index %s" % rank_index)
        coords = []
        for factor in reversed(self._factors):
            rank_index, digit = divmod(rank_index, factor)
            coords.append(digit)
        return tuple(reversed(coords))

    def rank_of(self, coords):  # -> int
        check_arg(len(coords) == len(self._factors), ErrorCode.RANKMISMATCH,
                  "%d coordinates for rank %d" % (len(coords), self.rank))
        index = 0
        for coord, factor, weight in zip(coords, self._factors, self._radix):
            check_arg(0 <= coord < factor, ErrorCode.BADELEMENT,
                      "coordinate %s mod %d" % (coord, factor))
            index += coord * weight
        return index

    def __eq__(self, other):
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return self._factors == other._factors

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(('AbelianGroup', self._factors))

    def __repr__(self):
        return "AbelianGroup(%s)" % str(self)

    def __str__(self):
        if not self._factors:
            return "1"
        return ",".join(str(f) for f in self._factors)


class GroupElement(object):
    """An element of an :class:`AbelianGroup`, held both as coordinates and
    as its mixed-radix rank index."""
    __slots__ = ('_group', '_coords', '_rank_index')

    def __init__(self, group, coords):
        coords = tuple(int(c) for c in coords)
        self._rank_index = group.rank_of(coords)
        self._group = group
        self._coords = coords

    @classmethod
    def from_rank(cls, group, rank_index):
        return cls(group, group.coordinates_of(rank_index))

    @property
    def group(self):  # -> AbelianGroup
        return self._group

    @property
    def coordinates(self):  # -> tuple[int]
        return self._coords

    @property
    def rank_index(self):  # -> int
        return self._rank_index

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return (self._group == other._group
                and self._coords == other._coords)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._group, self._coords))

    def __repr__(self):
        return "GroupElement(%s; %s)" % (self._group, str(self))

    def __str__(self):
        return ",".join(str(c) for c in self._coords)


class GroupType(collections.namedtuple('GroupType', 'tag p')):
    """The type of a group: I(p) with witness prime p, II or III."""
    __slots__ = ()

    def __str__(self):
        if self.tag == GroupTypeTag.TYPE_I:
            return "I(%d)" % self.p
        if self.tag == GroupTypeTag.TYPE_II:
            return "II"
        return "III"


class Character(object):
    """A character of G, identified with a coefficient element a of G:
    gamma(x) = exp(2 pi i sum(a_i x_i / m_i)).

    Values are computed from the exact phase t/m (t an integer reduced
    mod the exponent m) and are never compared as floats.

    Parameters
    ----------
    coeffs : GroupElement
        The coefficient element a.
    """
    __slots__ = ('_coeffs', '_order', '_weights')

    def __init__(self, coeffs):
        group = coeffs.group
        m = group.exponent
        order = 1
        weights = []
        for a, factor in zip(coeffs.coordinates, group.invariant_factors):
            order = lcm(order, factor // gcd(a, factor))
            weights.append(a * (m // factor))
        self._coeffs = coeffs
        self._order = order
        self._weights = tuple(weights)

    @property
    def owner(self):  # -> AbelianGroup
        return self._coeffs.group

    @property
    def coeffs(self):  # -> GroupElement
        return self._coeffs

    @property
    def order(self):  # -> int
        return self._order

    @property
    def rank_index(self):  # -> int
        return self._coeffs.rank_index

    @property
    def is_trivial(self):  # -> bool
        return self._order == 1

    def _as_element(self, x):
        if not isinstance(x, GroupElement):
            return GroupElement.from_rank(self.owner, x)
        if x.group != self.owner:
            raise LabError(ErrorCode.GROUPMISMATCH)
        return x

    def phase_numerator(self, x):  # -> int
        """t in [0, m) with gamma(x) = exp(2 pi i t / m); x is a
        GroupElement or a rank index."""
        x = self._as_element(x)
        m = self.owner.exponent
        return sum(w * c for w, c in zip(self._weights, x.coordinates)) % m

    def coset_index(self, x):  # -> int
        """j in Z/qZ with gamma(x) = exp(2 pi i j / q)."""
        return (self.phase_numerator(x) * self._order) // self.owner.exponent

    def __call__(self, x):  # -> complex
        return root_of_unity(self.coset_index(x), self._order)

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(('Character', self._coeffs))

    def __repr__(self):
        return "Character(%s; a=%s, q=%d)" % (self.owner, self._coeffs,
                                              self._order)

    def __str__(self):
        return str(self._coeffs)


def root_of_unity(j, q):  # -> complex
    """exp(2 pi i j / q) with j reduced mod q before evaluation."""
    j %= q
    return cmath.rect(1.0, 2.0 * math.pi * j / q)


class Subset(object):
    """A subset F of G held as a bit mask over rank indices.

    Attributes
    ----------
    owner : AbelianGroup
        The group containing the subset
    mask : int
        Bit i is set iff the element of rank i belongs to F
    size : int
        |F|
    density : Fraction
        |F| / n
    """
    __slots__ = ('_group', '_mask', '_size')

    def __init__(self, group, mask):
        mask = int(mask)
        check_arg(0 <= mask < (1 << group.order), ErrorCode.BADSUBSETSPEC,
                  "mask %#x too wide for order %d" % (max(mask, 0),
                                                      group.order))
        self._group = group
        self._mask = mask
        self._size = popcount(mask)

    @property
    def owner(self):  # -> AbelianGroup
        return self._group

    @property
    def mask(self):  # -> int
        return self._mask

    @property
    def size(self):  # -> int
        return self._size

    @property
    def density(self):  # -> Fraction
        return Fraction(self._size, self._group.order)

    @property
    def elements(self):  # -> list[int]
        return list(iter_bits(self._mask))

    def __contains__(self, rank_index):
        return rank_index >= 0 and bool((self._mask >> rank_index) & 1)

    def __iter__(self):
        return iter_bits(self._mask)

    def __len__(self):
        return self._size

    def __eq__(self, other):
        if not isinstance(other, Subset):
            return NotImplemented
        return self._group == other._group and self._mask == other._mask

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._group, self._mask))

    def __repr__(self):
        return "Subset(%s; %s)" % (self._group, str(self))

    def __str__(self):
        return "%#x" % self._mask if self._mask else "0x0"


SchurStats = collections.namedtuple(
    "SchurStats", "ordered_triple_count delta residual")

SumFreeCensus = collections.namedtuple(
    "SumFreeCensus", "group sf_count sigma max_size witness mu_formula")

BoundReport = collections.namedtuple(
    "BoundReport", "check_name lhs rhs holds hard context")


class CosetProfile(object):
    """The densities of F across the cosets H_j of ker(gamma).

    Attributes
    ----------
    subset : Subset
        F
    character : Character
        gamma, of order q
    coset_size : int
        n / q
    parts : tuple of tuple of int
        The rank indices of F_j = F n H_j, for j in Z/qZ
    part_counts : tuple of int
        |F_j|
    alphas : tuple of Fraction
        |F_j| / (n / q)
    k : int or None
        (q - 1) / 6 when q = 1 (mod 6)
    """
    __slots__ = ('_subset', '_character', '_parts')

    def __init__(self, subset, character, parts):
        self._subset = subset
        self._character = character
        self._parts = tuple(tuple(p) for p in parts)

    @property
    def subset(self):  # -> Subset
        return self._subset

    @property
    def character(self):  # -> Character
        return self._character

    @property
    def q(self):  # -> int
        return self._character.order

    @property
    def coset_size(self):  # -> int
        return self._subset.owner.order // self._character.order

    @property
    def parts(self):  # -> tuple[tuple[int]]
        return self._parts

    @property
    def part_counts(self):  # -> tuple[int]
        return tuple(len(p) for p in self._parts)

    @property
    def alphas(self):  # -> tuple[Fraction]
        size = self.coset_size
        return tuple(Fraction(len(p), size) for p in self._parts)

    @property
    def k(self):  # -> int or None
        q = self._character.order
        return (q - 1) // 6 if q % 6 == 1 else None

    def __repr__(self):
        return "CosetProfile(q=%d, counts=%s)" % (self.q,
                                                  list(self.part_counts))
