# -*- coding: UTF-8 -*-

"""
BoundReport serialization (CSV and JSON lines), deterministic ordering and
replay of a serialized row.
"""
from __future__ import absolute_import, division, print_function
import collections
import csv
import io
import json
import os
import tempfile
from fractions import Fraction

from builtins import *  # @UnusedWildImport

from sumfree_lab import checks
from sumfree_lab.config import ConstantsConfig
from sumfree_lab.enums import CheckName, ErrorCode, OutputFormat
from sumfree_lab.errors import LabError
from sumfree_lab.fourier import parse_subset_spec
from sumfree_lab.groups import group_sort_key, parse_element, parse_group_spec
from sumfree_lab.structs import Character

COLUMNS = ('check_name', 'group', 'subset', 'char', 'params', 'lhs', 'rhs',
           'holds')


def format_value(value):
    """Formats a report value: Fractions as "p/q" (or "p"), floats with 17
    significant digits, lists joined by "|" and None as ""."""
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return "%d/%d" % (value.numerator, value.denominator)
    if isinstance(value, float):
        return '%.17g' % value
    if isinstance(value, (list, tuple)):
        return "|".join(format_value(v) for v in value)
    return str(value)


def format_params(params):  # -> str
    return ";".join("%s=%s" % (key, format_value(value))
                    for key, value in params.items())


def parse_params(text):
    """Parses "key=value;key=value" into an ordered dict of strings."""
    params = collections.OrderedDict()
    for item in text.split(';'):
        item = item.strip()
        if not item:
            continue
        if '=' not in item:
            raise LabError(ErrorCode.BADPARAMETER, repr(item))
        key, value = item.split('=', 1)
        params[key.strip()] = value.strip()
    return params


def format_holds(holds):
    if holds is None:
        return 'n/a'
    return 'true' if holds else 'false'


def report_row(report):
    """Returns the serialized fields of a report, keyed by column."""
    context = report.context
    return collections.OrderedDict([
        ('check_name', CheckName(report.check_name).label),
        ('group', context['group']),
        ('subset', context['subset']),
        ('char', context['char']),
        ('params', format_params(context['params'])),
        ('lhs', format_value(report.lhs)),
        ('rhs', format_value(report.rhs)),
        ('holds', format_holds(report.holds)),
    ])


def report_sort_key(report, groups=None):
    """Orders reports by group, subset mask, check, character rank and
    parameters. groups caches parsed group specs."""
    context = report.context
    spec = context['group']
    if groups is None:
        groups = {}
    if spec not in groups:
        groups[spec] = parse_group_spec(spec)
    group = groups[spec]
    char_rank = -1
    if context['char']:
        char_rank = parse_element(group, context['char']).rank_index
    return (group_sort_key(group), int(context['subset'], 16),
            int(report.check_name), char_rank,
            format_params(context['params']))


def sort_reports(reports):  # -> list[BoundReport]
    groups = {}
    return sorted(reports, key=lambda report: report_sort_key(report, groups))


def is_hard_failure(report):  # -> bool
    return bool(report.hard) and report.holds is False


def format_reports(reports, output_format=OutputFormat.CSV):
    """Returns the text of a report file, header included for CSV."""
    buf = io.StringIO()
    if output_format == OutputFormat.CSV:
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(COLUMNS)
        for report in reports:
            writer.writerow(list(report_row(report).values()))
    else:
        for report in reports:
            row = report_row(report)
            row['holds'] = report.holds
            buf.write(json.dumps(row) + '\n')
    return buf.getvalue()


def write_reports(reports, path, output_format=OutputFormat.CSV):
    """Writes reports to path through a temporary file in the same
    directory, moved into place once complete. On failure the temporary file
    is removed and a LabError with
    :const:`~sumfree_lab.enums.ErrorCode.FILEERROR` names the path."""
    text = format_reports(reports, output_format)
    directory = os.path.dirname(os.path.abspath(path))
    temp_name = None
    try:
        fd, temp_name = tempfile.mkstemp(prefix='.sumfree-', suffix='.tmp',
                                         dir=directory)
        with io.open(fd, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
        os.replace(temp_name, path)
    except (IOError, OSError) as e:
        if temp_name is not None and os.path.exists(temp_name):
            os.remove(temp_name)
        raise LabError(ErrorCode.FILEERROR, "%s: %s" % (path, e))


def read_report_rows(path, output_format=OutputFormat.CSV):
    """Reads the rows of a report file as ordered dicts of strings."""
    try:
        with io.open(path, 'r', encoding='utf-8', newline='') as f:
            if output_format == OutputFormat.CSV:
                return [collections.OrderedDict(row)
                        for row in csv.DictReader(f)]
            rows = []
            for line in f:
                if line.strip():
                    row = json.loads(line,
                                     object_pairs_hook=collections.OrderedDict)
                    row['holds'] = format_holds(row['holds'])
                    rows.append(row)
            return rows
    except (IOError, OSError) as e:
        raise LabError(ErrorCode.FILEERROR, "%s: %s" % (path, e))


def _replay_constants(params, constants):
    values = (constants or ConstantsConfig()).as_dict()
    for key in ('eta', 'eta_sord'):
        if key in params:
            values[key] = float(params[key])
    if 'q0' in params:
        values['q0'] = int(params['q0'])
    if 'C' in params:
        values['C_empirical'] = float(params['C'])
    return ConstantsConfig(**values)


def replay_report(row, constants=None):
    """Re-runs the check named by a serialized row from its context columns.

    Parameters
    ----------
    row : dict
        A row as read by :func:`read_report_rows`
    constants : ConstantsConfig, optional
        Constants for parameters the row does not carry

    Returns
    -------
    BoundReport
        The recomputed report; its serialized lhs and rhs equal the row's
    """
    try:
        check = CheckName[row['check_name'].upper()]
    except KeyError:
        raise LabError(ErrorCode.BADCHECKNAME, repr(row['check_name']))
    group = parse_group_spec(row['group'])
    subset = parse_subset_spec(group, row['subset'])
    params = parse_params(row.get('params', ''))
    constants = _replay_constants(params, constants)
    delta = Fraction(params['delta']) if 'delta' in params else None
    profile = None
    if row.get('char'):
        character = Character(parse_element(group, row['char']))
        if not character.is_trivial:
            profile = checks.coset_profile(subset, character)

    if check == CheckName.BACKEND_AGREEMENT:
        return checks.check_backend_agreement(subset)
    if check == CheckName.TRIPLE_LOWER_BOUND:
        return checks.check_triple_lower_bound(
            subset, profile, int(params['l']), int(params['j']))
    if check == CheckName.ALPHAL:
        return checks.check_alphal_pair(profile, delta, int(params['l']),
                                        int(params['j']))
    if check == CheckName.LT:
        return checks.check_Lt(profile, Fraction(params['t']), delta)
    if check == CheckName.MIDDLE_SUM:
        return checks.check_middle_sum(profile, delta)
    if check == CheckName.SPECIAL_DIRECTION:
        return checks.check_special_direction_bound(subset)
    if check == CheckName.COSINE_SUM:
        return checks.check_cosine_sum(subset, constants)
    if check == CheckName.SORD:
        indices = None
        if 'indices' in params:
            indices = [int(i) for i in params['indices'].split('|') if i]
        return checks.check_sord(subset, constants, indices)
    if check == CheckName.DENSITY_12ML:
        return checks.check_12ml(subset, delta)
    if check == CheckName.LM_ITEM1:
        return checks.check_lm_item1(subset, delta)
    if check == CheckName.LM_ITEM2:
        return checks.check_lm_item2(subset, delta)
    return checks.check_bgschf(subset, delta, constants.C_empirical)
