from __future__ import absolute_import, division, print_function
import collections
import math

from builtins import *  # @UnusedWildImport

from sumfree_lab.config import HARD_CHECKS
from sumfree_lab.enums import ErrorCode
from sumfree_lab.errors import LabError, check_arg
from sumfree_lab.fourier import (format_subset_spec, fourier_transform,
                                 members_by_coset)
from sumfree_lab.groups import addition_table, format_group_spec
from sumfree_lab.structs import BoundReport, CosetProfile


def report_context(subset, character=None, params=()):
    """Returns the replay context of a report: group spec, subset spec,
    character coefficients ("" when the check has no character) and the
    ordered parameters."""
    return collections.OrderedDict([
        ('group', format_group_spec(subset.owner)),
        ('subset', format_subset_spec(subset)),
        ('char', str(character) if character is not None else ''),
        ('params', collections.OrderedDict(params)),
    ])


def make_report(check_name, lhs, rhs, holds, context):  # -> BoundReport
    return BoundReport(check_name, lhs, rhs, holds,
                       check_name in HARD_CHECKS, context)


def coset_indices_of(character):
    """Returns j(x) for every x in rank order, from exact phases."""
    return [character.coset_index(x)
            for x in range(character.owner.order)]


def coset_profile(subset, character, coset_indices=None):
    """Splits F across the cosets H_j of ker(gamma).

    Parameters
    ----------
    subset : Subset
        F
    character : Character
        A nontrivial character of the same group
    coset_indices : list of int, optional
        j(x) for every x, as in
        :meth:`sumfree_lab.fourier.CharacterTable.coset_indices`

    Returns
    -------
    CosetProfile
    """
    if subset.owner != character.owner:
        raise LabError(ErrorCode.GROUPMISMATCH)
    if character.is_trivial:
        raise LabError(ErrorCode.TRIVIALCHARACTER, "coset profile")
    q = character.order
    if coset_indices is None:
        coset_indices = coset_indices_of(character)
    parts = members_by_coset(subset, coset_indices, q)
    profile = CosetProfile(subset, character, parts)
    size = profile.coset_size
    if (subset.owner.order % q
            or sum(profile.part_counts) != subset.size
            or max(profile.part_counts) > size):
        raise LabError(ErrorCode.INCONSISTENT, repr(profile))
    return profile


def check_homomorphism(profile, table=None, coset_indices=None):
    """Returns True iff x in H_i and y in H_j imply x + y in H_{i+j} for all
    pairs of elements of the group."""
    character = profile.character
    group = character.owner
    q = character.order
    if table is None:
        table = addition_table(group)
    if coset_indices is None:
        coset_indices = coset_indices_of(character)
    n = group.order
    for x in range(n):
        row = table[x]
        i = coset_indices[x]
        for y in range(n):
            if coset_indices[row[y]] != (i + coset_indices[y]) % q:
                return False
    return True


def coset_triple_matrix(subset, profile, table=None, coset_indices=None):
    """Returns N with N[l][j] the number of pairs (x, y), x in F_l and
    y in F_j, with x + y in F. Such an x + y lies in F_{l+j}."""
    character = profile.character
    q = character.order
    if table is None:
        table = addition_table(subset.owner)
    if coset_indices is None:
        coset_indices = coset_indices_of(character)
    matrix = [[0] * q for _ in range(q)]
    mask = subset.mask
    members = subset.elements
    for x in members:
        row = table[x]
        counts = matrix[coset_indices[x]]
        for y in members:
            if (mask >> row[y]) & 1:
                counts[coset_indices[y]] += 1
    return matrix


def check_cosine_identity(subset, character, coset_indices=None):
    """Returns (Re F^(gamma), (n/q) sum_j alpha_j cos(2 pi j/q)).

    The two agree up to rounding whenever gamma has order q; the trivial
    character is allowed here (q = 1).
    """
    q = character.order
    n = subset.owner.order
    if coset_indices is None:
        coset_indices = coset_indices_of(character)
    parts = members_by_coset(subset, coset_indices, q)
    size = n // q
    via_cosets = (n / q) * sum(
        (len(part) / size) * math.cos(2 * math.pi * j / q)
        for j, part in enumerate(parts))
    return fourier_transform(subset, character).real, via_cosets


def _k_of(q):
    check_arg(q % 6 == 1 and q >= 7, ErrorCode.BADMODULUS,
              "q = %d is not 1 mod 6" % q)
    return (q - 1) // 6


def low_interval(q):  # -> list[int]
    k = _k_of(q)
    return list(range(k + 1, 2 * k + 1))


def mid_interval(q):  # -> list[int]
    k = _k_of(q)
    return list(range(2 * k + 1, 4 * k + 1))


def top_interval(q):  # -> list[int]
    k = _k_of(q)
    return list(range(4 * k + 1, 5 * k + 1))


def edge_indices(q):
    """Returns {0..k} and {5k+1..6k}, the indices outside k+1..5k."""
    k = _k_of(q)
    return list(range(0, k + 1)) + list(range(5 * k + 1, 6 * k + 1))


def middle_pairs(q):
    """Splits k+1..5k (q = 6k + 1) into the 2k disjoint pairs (i, 2i) with i
    in LOW or TOP. 2i falls in MID: even for i in LOW, odd for i in TOP.

    Returns
    -------
    list of (int, int)
    """
    pairs = [(i, (2 * i) % q) for i in low_interval(q) + top_interval(q)]
    covered = sorted(index for pair in pairs for index in pair)
    k = _k_of(q)
    if covered != list(range(k + 1, 5 * k + 1)):
        raise LabError(ErrorCode.INCONSISTENT, "pairing for q = %d" % q)
    return pairs
