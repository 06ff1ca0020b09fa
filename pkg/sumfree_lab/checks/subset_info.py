from __future__ import absolute_import, division, print_function
from builtins import *  # @UnusedWildImport

from sumfree_lab.checks.cosets import coset_profile, coset_triple_matrix
from sumfree_lab.fourier import (DIRECT, CharacterTable,
                                 schur_count_bruteforce, schur_count_fourier,
                                 special_direction, transform_all)
from sumfree_lab.groups import addition_table, classify, mu


class GroupTables:
    """The rank-indexed tables of one group, built once and shared by every
    SubsetInfo of that group.

    Parameters
    ----------
    group : AbelianGroup
    """

    def __init__(self, group):
        self._group = group
        self._addition = addition_table(group)
        self._characters = CharacterTable(group)

    @property
    def group(self):  # -> AbelianGroup
        return self._group

    @property
    def addition(self):  # -> list[list[int]]
        return self._addition

    @property
    def characters(self):  # -> CharacterTable
        return self._characters

    @property
    def group_type(self):  # -> GroupType
        return classify(self._group)

    @property
    def mu(self):  # -> Fraction or None
        return mu(self._group) if self._group.order >= 2 else None


class SubsetInfo:
    """Provides the statistics of one subset F that the checks consume,
    computing each on first use.

    Parameters
    ----------
    subset : Subset
        F
    tables : GroupTables, optional
        Tables of the owner group; built when not given
    """

    def __init__(self, subset, tables=None):
        if tables is None:
            tables = GroupTables(subset.owner)
        self._subset = subset
        self._tables = tables
        self._stats = None
        self._direction = None
        self._profiles = {}
        self._matrices = {}

    @property
    def subset(self):  # -> Subset
        return self._subset

    @property
    def tables(self):  # -> GroupTables
        return self._tables

    @property
    def density(self):  # -> Fraction
        return self._subset.density

    @property
    def schur_stats(self):  # -> SchurStats
        if self._stats is None:
            self._stats = schur_count_bruteforce(self._subset,
                                                 self._tables.addition)
        return self._stats

    @property
    def delta(self):  # -> Fraction
        return self.schur_stats.delta

    def fourier_stats(self, backend=DIRECT):  # -> SchurStats
        return schur_count_fourier(self._subset, backend,
                                   self._tables.characters)

    def transform(self, backend=DIRECT):  # -> numpy.ndarray
        return transform_all(self._subset, backend, self._tables.characters)

    @property
    def special_direction(self):  # -> (Character, float)
        if self._direction is None:
            self._direction = special_direction(self._subset, DIRECT,
                                                self._tables.characters)
        return self._direction

    def get_profile(self, character):  # -> CosetProfile
        key = character.rank_index
        if key not in self._profiles:
            indices = self._tables.characters.coset_indices(key)
            self._profiles[key] = coset_profile(self._subset, character,
                                                indices)
        return self._profiles[key]

    def get_triple_matrix(self, character):  # -> list[list[int]]
        key = character.rank_index
        if key not in self._matrices:
            indices = self._tables.characters.coset_indices(key)
            self._matrices[key] = coset_triple_matrix(
                self._subset, self.get_profile(character),
                self._tables.addition, indices)
        return self._matrices[key]
