# -*- coding: UTF-8 -*-

"""
Characters, Fourier transforms of subsets and Schur-triple counting.

F^(gamma) denotes sum over b in F of gamma(b). The number of ordered Schur
triples of F is n^-1 sum over gamma of F^(gamma)^2 conj(F^(gamma)); the
conjugate is what makes the identity equal the ordered-triple count.
"""
from __future__ import absolute_import, division, print_function
from fractions import Fraction

import numpy as np
from builtins import *  # @UnusedWildImport

from sumfree_lab.enums import ErrorCode
from sumfree_lab.errors import LabError, check_arg
from sumfree_lab.groups import (addition_table, element_coordinates,
                                negation_table)
from sumfree_lab.structs import (Character, GroupElement, SchurStats, Subset,
                                 iter_bits, root_of_unity)

DIRECT = 'direct'
FFT = 'fft'
BACKENDS = (DIRECT, FFT)

# Largest distance from an integer tolerated before rounding a Fourier count
_ROUNDING_FAULT = 1e-3


def subset_from_elements(group, rank_indices):
    """Returns the Subset holding the given rank indices."""
    mask = 0
    for index in rank_indices:
        check_arg(0 <= index < group.order, ErrorCode.BADSUBSETSPEC,
                  "rank index %s not below %d" % (index, group.order))
        mask |= 1 << index
    return Subset(group, mask)


def empty_subset(group):  # -> Subset
    return Subset(group, 0)


def full_subset(group):  # -> Subset
    return Subset(group, (1 << group.order) - 1)


def negate_subset(subset, neg_table=None):
    """Returns -F."""
    group = subset.owner
    if neg_table is None:
        neg_table = negation_table(group)
    return subset_from_elements(group, [neg_table[x] for x in subset])


def parse_subset_spec(group, text):
    """Parses a subset spec: rank indices "1,2,3", a hex mask "0xE", or ""
    for the empty set.

    Parameters
    ----------
    group : AbelianGroup
        The owner group
    text : str
        The subset spec

    Returns
    -------
    Subset
    """
    text = text.strip()
    if not text:
        return empty_subset(group)
    if text.lower().startswith('0x'):
        try:
            mask = int(text, 16)
        except ValueError:
            raise LabError(ErrorCode.BADSUBSETSPEC, repr(text))
        return Subset(group, mask)
    try:
        indices = [int(token) for token in text.split(',')]
    except ValueError:
        raise LabError(ErrorCode.BADSUBSETSPEC, repr(text))
    return subset_from_elements(group, indices)


def format_subset_spec(subset):  # -> str
    return str(subset)


def indicator(subset):
    """Returns the 0/1 membership vector of F in rank order."""
    mask = subset.mask
    return np.array([(mask >> i) & 1 for i in range(subset.owner.order)],
                    dtype=np.float64)


def character_order(character):
    """Returns q = lcm over i of m_i / gcd(a_i, m_i); q = 1 iff the
    character is trivial."""
    return character.order


def character_from_rank(group, rank_index):  # -> Character
    return Character(GroupElement.from_rank(group, rank_index))


def all_characters(group):
    """Yields the n characters of the group by ascending coefficient rank;
    the trivial character comes first."""
    for rank_index in range(group.order):
        yield character_from_rank(group, rank_index)


class CharacterTable:
    """Precomputed character data for one group.

    Holds every character, the exact phase numerators t (gamma_a(x) =
    exp(2 pi i t / m)) and the coset index of each element under each
    character. Building the table costs O(n^2) time and memory.

    Parameters
    ----------
    group : AbelianGroup
        The group whose dual is tabulated
    """
    def __init__(self, group):
        self._group = group
        self._characters = list(all_characters(group))
        m = group.exponent
        coords = element_coordinates(group)
        scale = np.array([m // f for f in group.invariant_factors],
                         dtype=np.int64)
        if group.rank == 0:
            phases = np.zeros((1, 1), dtype=np.int64)
        else:
            phases = (coords * scale).dot(coords.T) % m
        orders = np.array([c.order for c in self._characters],
                          dtype=np.int64)
        self._phases = phases
        self._coset_indices = (phases * orders[:, None]) // m
        self._values = np.exp(2j * np.pi * phases / m)

    @property
    def group(self):  # -> AbelianGroup
        return self._group

    @property
    def characters(self):  # -> list[Character]
        return self._characters

    @property
    def values(self):  # -> numpy.ndarray
        return self._values

    def character(self, rank_index):  # -> Character
        return self._characters[rank_index]

    def coset_indices(self, rank_index):  # -> list[int]
        return self._coset_indices[rank_index].tolist()


def _check_table(subset, table):
    if table is None:
        return CharacterTable(subset.owner)
    if table.group != subset.owner:
        raise LabError(ErrorCode.GROUPMISMATCH)
    return table


def fourier_transform(subset, character):
    """Returns F^(gamma) = sum over b in F of gamma(b).

    Parameters
    ----------
    subset : Subset
        F
    character : Character
        gamma, of the same group

    Returns
    -------
    complex
        Equal to |F| for the trivial character.
    """
    if subset.owner != character.owner:
        raise LabError(ErrorCode.GROUPMISMATCH)
    q = character.order
    counts = [0] * q
    for x in subset:
        counts[character.coset_index(x)] += 1
    return sum(count * root_of_unity(j, q) for j, count in enumerate(counts)
               if count)


def transform_all(subset, backend=DIRECT, table=None):
    """Returns F^ evaluated at every character, indexed by coefficient rank.

    Parameters
    ----------
    subset : Subset
        F
    backend : str
        'direct' sums O(n) terms per character through the character table;
        'fft' runs numpy.fft.fftn over the invariant-factor shape.
    table : CharacterTable, optional
        Reused for the direct backend when given

    Returns
    -------
    numpy.ndarray
        Complex vector of length n
    """
    group = subset.owner
    f = indicator(subset)
    if backend == DIRECT:
        table = _check_table(subset, table)
        return table.values.dot(f)
    if backend == FFT:
        if group.rank == 0:
            return f.astype(np.complex128)
        spectrum = np.fft.fftn(f.reshape(group.invariant_factors))
        # fftn uses exp(-2 pi i a.x/m); the indicator is real
        return np.conj(spectrum).ravel()
    raise LabError(ErrorCode.BADBACKEND, repr(backend))


def parseval_sum(subset, backend=DIRECT, table=None):
    """Returns sum over gamma of |F^(gamma)|^2, which equals n |F|."""
    values = transform_all(subset, backend, table)
    return float(np.sum(np.abs(values) ** 2))


def schur_count_bruteforce(subset, table=None):
    """Counts the ordered triples (x, y, z) in F^3 with x + y = z by scanning
    the pairs (x, y).

    Parameters
    ----------
    subset : Subset
        F
    table : list of list of int, optional
        The group's addition table, see
        :func:`sumfree_lab.groups.addition_table`

    Returns
    -------
    SchurStats
    """
    group = subset.owner
    if table is None:
        table = addition_table(group)
    mask = subset.mask
    members = subset.elements
    count = 0
    for x in members:
        row = table[x]
        for y in members:
            if (mask >> row[y]) & 1:
                count += 1
    n = group.order
    return SchurStats(count, Fraction(count, n * n), 0.0)


def schur_count_fourier(subset, backend=DIRECT, table=None):
    """Counts ordered Schur triples through the identity
    T = n^-1 sum over gamma of F^(gamma)^2 conj(F^(gamma)).

    The real part is rounded to the nearest integer. A LabError with
    :const:`~sumfree_lab.enums.ErrorCode.INCONSISTENT` is raised if the value
    before rounding is more than 1e-3 away from an integer.

    Returns
    -------
    SchurStats
        residual holds the distance of the unrounded value from the result
    """
    group = subset.owner
    n = group.order
    values = transform_all(subset, backend, table)
    total = np.sum(np.abs(values) ** 2 * values) / n
    count = int(round(total.real))
    residual = max(abs(total.real - count), abs(total.imag))
    if residual > _ROUNDING_FAULT:
        raise LabError(ErrorCode.INCONSISTENT,
                       "Fourier count %r is not an integer for %r"
                       % (complex(total), subset))
    return SchurStats(count, Fraction(count, n * n), float(residual))


def special_direction(subset, backend=DIRECT, table=None):
    """Returns the nontrivial character minimizing Re F^(gamma).

    Values within 1e-9 * n of the minimum count as ties, and ties go to the
    smallest coefficient rank, so the choice does not depend on the backend.

    Parameters
    ----------
    subset : Subset
        F, in a group of order >= 2

    Returns
    -------
    (Character, float)
        gamma_s and Re F^(gamma_s)
    """
    group = subset.owner
    check_arg(group.order >= 2, ErrorCode.TRIVIALGROUP, "special direction")
    real = transform_all(subset, backend, table).real
    candidates = real[1:]
    least = float(np.min(candidates))
    tolerance = 1e-9 * group.order
    for offset, value in enumerate(candidates.tolist()):
        if value <= least + tolerance:
            rank_index = offset + 1
            break
    if table is not None and backend == DIRECT:
        character = table.character(rank_index)
    else:
        character = character_from_rank(group, rank_index)
    return character, float(real[rank_index])


def members_by_coset(subset, coset_indices, q):
    """Splits F by coset index; coset_indices[x] is j with x in H_j."""
    parts = [[] for _ in range(q)]
    for x in iter_bits(subset.mask):
        parts[coset_indices[x]].append(x)
    return parts
