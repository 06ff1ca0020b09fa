# -*- coding: UTF-8 -*-
from __future__ import absolute_import, division, print_function
try:
    # Prefer the Python 3.6+ IntFlag
    from enum import IntFlag
except ImportError:
    # Fall back to aenum's IntFlag if necessary
    from aenum import IntFlag
from builtins import *  # @UnusedWildImport
from enum import IntEnum


class ErrorCode(IntEnum):
    NOERRORS = 0  # No error occurred
    BADFACTOR = 1  # Cyclic factor must be an integer >= 2
    BADGROUPSPEC = 2  # Group spec string could not be parsed
    RANKMISMATCH = 3  # Coordinate count does not match the group rank
    GROUPMISMATCH = 4  # Operands belong to different groups
    BADELEMENT = 5  # Coordinate or rank index out of range
    TRIVIALGROUP = 6  # Operation is undefined on the trivial group
    TRIVIALCHARACTER = 7  # Operation needs a nontrivial character
    BADSUBSETSPEC = 8  # Subset spec string could not be parsed
    LIMITEXCEEDED = 9  # Group order above the configured enumeration limit
    BADMODULUS = 10  # Character order is not 1 mod 6
    BADPARAMETER = 11  # Parameter outside its admissible range
    DEGENERATEDENSITY = 12  # Subset is empty or the whole group
    INFEASIBLE = 13  # Extremal problem has no feasible weights
    INCONSISTENT = 14  # Internal consistency check failed
    FILEERROR = 15  # Report or config file could not be read or written
    BADCONFIG = 16  # Config file or environment value is malformed
    BADCHECKNAME = 17  # Unknown check name
    BADBACKEND = 18  # Unknown transform backend


class GroupTypeTag(IntEnum):
    TYPE_I = 1  # Some prime p = 2 (mod 3) divides n
    TYPE_II = 2  # No such prime, but 3 divides n
    TYPE_III = 3  # Every divisor of n is 1 (mod 3)


class CheckName(IntFlag):
    BACKEND_AGREEMENT = 1 << 0  # Fourier count equals pair-scan count
    TRIPLE_LOWER_BOUND = 1 << 1  # |F_l|(|F_j| + |F_j+l| - |H|) triples
    ALPHAL = 1 << 2  # a_j + a_j+l <= 1 + dq^2/a_l
    LT = 1 << 3  # sum over L(t) of a_i <= dq^2/t
    MIDDLE_SUM = 1 << 4  # sum a_k+1..a_5k <= 2k + 2d^1/2 q^3/2
    SPECIAL_DIRECTION = 1 << 5  # Re F(g_s) <= (d - a^3)/(a(1 - a)) n
    COSINE_SUM = 1 << 6  # cosine sum along g_s < 6d (report only)
    DENSITY_12ML = 1 << 7  # a <= max(1/3, mu + 3d^1/3)
    LM_ITEM1 = 1 << 8  # type III: a <= mu + 1/(3m) + 3d^1/3
    LM_ITEM2 = 1 << 9  # type III, d^1/3 m >= 1: a <= mu + 4d^1/3
    BGSCHF = 1 << 10  # a <= mu + C d^1/3 (report only)
    SORD = 1 << 11  # a_i <= 64 d^1/3 q^2/3 on edge cosets (report only)

    @property
    def label(self):  # -> str
        return self.name.lower()


class OutputFormat(IntEnum):
    CSV = 0
    JSONL = 1


class EmitMode(IntEnum):
    ALL = 0  # Write every report
    FAILURES = 1  # Write only reports that do not hold
