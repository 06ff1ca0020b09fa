# -*- coding: UTF-8 -*-

"""
Enumeration limits, the constants of the density argument and the settings
of verification sweeps, with a flat key = value file format.
"""
from __future__ import absolute_import, division, print_function
import collections
import copy
import io
import math
import os

from builtins import *  # @UnusedWildImport

from sumfree_lab.enums import CheckName, EmitMode, ErrorCode, OutputFormat
from sumfree_lab.errors import LabError, check_arg

DEFAULT_COUNT_LIMIT = 48
DEFAULT_SEARCH_LIMIT = 128
LIMIT_ENV = 'SUMFREE_LAB_LIMIT'

RNG_ALGORITHM = 'mt19937-sha256-v1'

ALL_CHECKS = tuple(CheckName(1 << bit) for bit in range(12))
HARD_CHECKS = frozenset([
    CheckName.BACKEND_AGREEMENT, CheckName.TRIPLE_LOWER_BOUND,
    CheckName.ALPHAL, CheckName.LT, CheckName.MIDDLE_SUM,
    CheckName.SPECIAL_DIRECTION, CheckName.DENSITY_12ML,
    CheckName.LM_ITEM1, CheckName.LM_ITEM2])

Limits = collections.namedtuple("Limits", "count_limit search_limit")


def get_limits(environ=None):
    """Returns the enumeration limits.

    SUMFREE_LAB_LIMIT overrides the defaults (48 for counting, 128 for the
    maximum search): "N" sets both, "N,M" sets them separately.

    Parameters
    ----------
    environ : dict, optional
        Mapping read instead of os.environ

    Returns
    -------
    Limits
    """
    environ = os.environ if environ is None else environ
    raw = environ.get(LIMIT_ENV, '').strip()
    if not raw:
        return Limits(DEFAULT_COUNT_LIMIT, DEFAULT_SEARCH_LIMIT)
    try:
        values = [int(token) for token in raw.split(',')]
    except ValueError:
        raise LabError(ErrorCode.BADCONFIG, "%s=%r" % (LIMIT_ENV, raw))
    if len(values) == 1:
        values = values * 2
    check_arg(len(values) == 2 and min(values) >= 1, ErrorCode.BADCONFIG,
              "%s=%r" % (LIMIT_ENV, raw))
    return Limits(values[0], values[1])


def parse_checks(text):
    """Parses a comma-separated list of check names ("all" selects every
    check) into a CheckName flag."""
    result = CheckName(0)
    for token in text.split(','):
        token = token.strip().lower()
        if not token:
            continue
        if token == 'all':
            for check in ALL_CHECKS:
                result |= check
            continue
        try:
            result |= CheckName[token.upper()]
        except KeyError:
            raise LabError(ErrorCode.BADCHECKNAME, repr(token))
    return result


def format_checks(checks):  # -> str
    return ",".join(check.label for check in ALL_CHECKS if checks & check)


def all_checks_flag():  # -> CheckName
    return parse_checks('all')


def _default_delta0(eta):
    return (1.0 / 6 - 1.0 / (2 * math.pi) - eta) / 8


class ConstantsConfig(object):
    """The constants of the density argument that are not pinned down
    numerically, held as configuration.

    Parameters
    ----------
    eta : float
        Smallness parameter of the cosine-sum inequality (default 2^-20)
    eta_sord : float
        Smallness parameter of the edge-coset bound (default 2^-50)
    delta0 : float
        Upper bound on delta for the extremal argument; defaults to
        (1/6 - 1/(2 pi) - eta) / 8
    q0 : int
        Character order threshold of the extremal argument (default 11)
    c : float
        Capacity constant; t_c = 1 + 1/c (default 10)
    C_empirical : float
        Constant of the report-only C delta^1/3 bound (default 4)
    """
    _FIELDS = ('eta', 'eta_sord', 'delta0', 'q0', 'c', 'C_empirical')

    def __init__(self, eta=2.0 ** -20, eta_sord=2.0 ** -50, delta0=None,
                 q0=11, c=10.0, C_empirical=4.0):
        if delta0 is None:
            delta0 = _default_delta0(eta)
        self.eta = float(eta)
        self.eta_sord = float(eta_sord)
        self.delta0 = float(delta0)
        self.q0 = int(q0)
        self.c = float(c)
        self.C_empirical = float(C_empirical)
        for name in self._FIELDS:
            check_arg(getattr(self, name) > 0, ErrorCode.BADCONFIG,
                      "%s must be positive" % name)

    def as_dict(self):  # -> dict
        return collections.OrderedDict(
            (name, getattr(self, name)) for name in self._FIELDS)

    def __eq__(self, other):
        if not isinstance(other, ConstantsConfig):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __repr__(self):
        return "ConstantsConfig(%s)" % ", ".join(
            "%s=%r" % item for item in self.as_dict().items())


class SweepConfig(object):
    """Settings of a verification sweep.

    Identical settings and seed produce byte-identical reports, whatever
    the worker count.

    Parameters
    ----------
    max_order : int
        Largest group order swept, >= 2
    samples_per_group : int
        Random subsets drawn per group above the exhaustive limit, >= 0
    rng_seed : int
        Root seed, 0 <= seed < 2^64
    checks : CheckName
        Enabled checks
    output_path : str
        Report file; None leaves the reports in memory only
    output_format : OutputFormat
        CSV or JSONL
    workers : int
        Worker processes, >= 1
    exhaustive_limit : int
        Groups of order up to this value are swept over all 2^n subsets
    char_budget : int
        Character-element evaluations allowed per subset before the
        characters are sampled
    emit : EmitMode
        Write all reports or only those that do not hold
    constants : ConstantsConfig
    """
    def __init__(self, max_order=12, samples_per_group=50, rng_seed=1,
                 checks=None, output_path=None,
                 output_format=OutputFormat.CSV, workers=1,
                 exhaustive_limit=12, char_budget=4096, emit=EmitMode.ALL,
                 rng=RNG_ALGORITHM, constants=None):
        self.max_order = int(max_order)
        self.samples_per_group = int(samples_per_group)
        self.rng_seed = int(rng_seed)
        self.checks = all_checks_flag() if checks is None else checks
        self.output_path = output_path
        self.output_format = OutputFormat(output_format)
        self.workers = int(workers)
        self.exhaustive_limit = int(exhaustive_limit)
        self.char_budget = int(char_budget)
        self.emit = EmitMode(emit)
        self.rng = rng
        self.constants = ConstantsConfig() if constants is None else constants
        self.validate()

    def validate(self):
        check_arg(self.max_order >= 2, ErrorCode.BADCONFIG,
                  "max_order must be >= 2")
        check_arg(self.samples_per_group >= 0, ErrorCode.BADCONFIG,
                  "samples must be >= 0")
        check_arg(0 <= self.rng_seed < 1 << 64, ErrorCode.BADCONFIG,
                  "seed must fit in 64 bits")
        check_arg(self.workers >= 1, ErrorCode.BADCONFIG,
                  "workers must be >= 1")
        check_arg(self.char_budget >= 1, ErrorCode.BADCONFIG,
                  "char_budget must be >= 1")
        check_arg(self.rng == RNG_ALGORITHM, ErrorCode.BADCONFIG,
                  "unsupported rng %r" % self.rng)

    def is_enabled(self, check):  # -> bool
        return bool(self.checks & check)


def _format_output_format(value):
    return OutputFormat(value).name.lower()


def _parse_output_format(text):
    try:
        return OutputFormat[text.strip().upper()]
    except KeyError:
        raise LabError(ErrorCode.BADCONFIG, "format %r" % text)


def _parse_emit(text):
    try:
        return EmitMode[text.strip().upper()]
    except KeyError:
        raise LabError(ErrorCode.BADCONFIG, "emit %r" % text)


# key -> (SweepConfig attribute, parser, formatter)
_SWEEP_KEYS = collections.OrderedDict([
    ('max_order', ('max_order', int, str)),
    ('samples', ('samples_per_group', int, str)),
    ('seed', ('rng_seed', int, str)),
    ('checks', ('checks', parse_checks, format_checks)),
    ('out', ('output_path', str, str)),
    ('format', ('output_format', _parse_output_format,
                _format_output_format)),
    ('workers', ('workers', int, str)),
    ('exhaustive_limit', ('exhaustive_limit', int, str)),
    ('char_budget', ('char_budget', int, str)),
    ('emit', ('emit', _parse_emit, lambda v: EmitMode(v).name.lower())),
    ('rng', ('rng', str, str)),
])

_CONSTANT_KEYS = collections.OrderedDict([
    ('eta', float), ('eta_sord', float), ('delta0', float), ('q0', int),
    ('c', float), ('C_empirical', float),
])


def parse_config_text(text, base=None):
    """Parses flat key = value text into a SweepConfig. Values not present
    are taken from base (or the defaults)."""
    cfg = copy.copy(base) if base is not None else SweepConfig()
    constants = cfg.constants.as_dict()
    for line_num, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise LabError(ErrorCode.BADCONFIG,
                           "line %d: expected key = value" % line_num)
        key, value = [part.strip() for part in line.split('=', 1)]
        try:
            if key in _SWEEP_KEYS:
                attr, parser, _ = _SWEEP_KEYS[key]
                setattr(cfg, attr, parser(value))
            elif key in _CONSTANT_KEYS:
                constants[key] = _CONSTANT_KEYS[key](value)
            else:
                raise LabError(ErrorCode.BADCONFIG,
                               "line %d: unknown key %r" % (line_num, key))
        except ValueError:
            raise LabError(ErrorCode.BADCONFIG,
                           "line %d: bad value %r" % (line_num, value))
    cfg.constants = ConstantsConfig(**constants)
    cfg.validate()
    return cfg


def format_config_text(cfg):
    """Returns the key = value text of a SweepConfig."""
    lines = []
    for key, (attr, _, formatter) in _SWEEP_KEYS.items():
        value = getattr(cfg, attr)
        if value is None:
            continue
        lines.append("%s = %s" % (key, formatter(value)))
    for key, value in cfg.constants.as_dict().items():
        lines.append("%s = %r" % (key, value))
    return "\n".join(lines) + "\n"


def load_config(config_file_name, base=None):
    """Loads sweep settings from a key = value file.

    Parameters
    ----------
    config_file_name : str
        The configuration file name
    base : SweepConfig, optional
        Settings to start from

    Returns
    -------
    SweepConfig
    """
    try:
        with io.open(config_file_name, 'r', encoding='utf-8') as f:
            text = f.read()
    except (IOError, OSError) as e:
        raise LabError(ErrorCode.FILEERROR, "%s: %s" % (config_file_name, e))
    return parse_config_text(text, base)


def save_config(cfg, config_file_name):
    """Saves sweep settings to a key = value file.

    Parameters
    ----------
    cfg : SweepConfig
    config_file_name : str
        The configuration file name
    """
    try:
        with io.open(config_file_name, 'w', encoding='utf-8') as f:
            f.write(format_config_text(cfg))
    except (IOError, OSError) as e:
        raise LabError(ErrorCode.FILEERROR, "%s: %s" % (config_file_name, e))
