# -*- coding: UTF-8 -*-

"""
Command-line front end.

Exit status: 0 on success, 1 when a hard check fails, 2 on a LabError.
"""
from __future__ import absolute_import, division, print_function
import argparse
import copy
import logging
import sys
from fractions import Fraction

from builtins import *  # @UnusedWildImport

from sumfree_lab import census as census_mod
from sumfree_lab.checks.extremal import (ExtremalCosineProblem,
                                         enumerate_weighted_cosine,
                                         minimize_weighted_cosine,
                                         solve_weighted_cosine_lp)
from sumfree_lab.config import (ConstantsConfig, SweepConfig, load_config,
                                parse_checks)
from sumfree_lab.enums import EmitMode, ErrorCode, OutputFormat
from sumfree_lab.errors import LabError
from sumfree_lab.fourier import (BACKENDS, parse_subset_spec,
                                 schur_count_bruteforce, schur_count_fourier)
from sumfree_lab.groups import classify, mu, parse_group_spec
from sumfree_lab.report import format_value, write_reports, format_reports
from sumfree_lab.sweep import run_sweep

logger = logging.getLogger(__name__)

_ORACLE_TOLERANCE = 1e-9
_ENUMERATION_LIMIT = 16


def cmd_mu(group_spec, out=sys.stdout):
    """Prints the type and mu(G), e.g. "type=I(2) mu=1/2 (0.500000)"."""
    group = parse_group_spec(group_spec)
    value = mu(group)
    print("type=%s mu=%s (%.6f)" % (classify(group), format_value(value),
                                     value), file=out)
    return 0


def cmd_classify(group_spec, out=sys.stdout):
    group = parse_group_spec(group_spec)
    print("group=%s n=%d m=%d type=%s" % (group, group.order, group.exponent,
                                          classify(group)), file=out)
    return 0


def cmd_census(group_specs, workers=1, out=sys.stdout):
    """Prints one line per group: n, |SF(G)|, sigma(G), mu(G) and
    sigma - mu. mu is undefined on the trivial group."""
    for spec in group_specs:
        group = parse_group_spec(spec)
        result = census_mod.census(group, workers=workers)
        if result.mu_formula is None:
            mu_text = "undefined"
            gap_text = "n/a"
        else:
            mu_text = format_value(result.mu_formula)
            gap_text = "%.6f" % (result.sigma - float(result.mu_formula))
        print("group=%s n=%d sf_count=%d sigma=%.6f mu=%s sigma-mu=%s"
              % (group, group.order, result.sf_count, result.sigma, mu_text,
                 gap_text), file=out)
    return 0


def cmd_maxsf(group_spec, out=sys.stdout):
    group = parse_group_spec(group_spec)
    size, witness = census_mod.max_sumfree(group)
    print("group=%s max_size=%d witness=%s elements=%s"
          % (group, size, witness,
             ",".join(str(x) for x in witness.elements)), file=out)
    return 0


def cmd_schur(group_spec, subset_spec, out=sys.stdout):
    """Prints T and delta from the pair scan and from every Fourier backend.
    Disagreement raises a LabError with
    :const:`~sumfree_lab.enums.ErrorCode.INCONSISTENT`."""
    group = parse_group_spec(group_spec)
    subset = parse_subset_spec(group, subset_spec)
    expected = schur_count_bruteforce(subset)
    print("bruteforce T=%d delta=%s" % (expected.ordered_triple_count,
                                        format_value(expected.delta)),
          file=out)
    for backend in BACKENDS:
        stats = schur_count_fourier(subset, backend)
        print("fourier-%s T=%d delta=%s residual=%.3g"
              % (backend, stats.ordered_triple_count,
                 format_value(stats.delta), stats.residual), file=out)
        if stats.ordered_triple_count != expected.ordered_triple_count:
            raise LabError(ErrorCode.INCONSISTENT,
                           "%s backend counts %d, pair scan %d"
                           % (backend, stats.ordered_triple_count,
                              expected.ordered_triple_count))
    return 0


def cmd_verify(cfg, out=sys.stdout):
    """Runs a sweep and writes the sorted reports to cfg.output_path, or to
    out when no path is set. Returns 1 iff some hard check fails."""
    result = run_sweep(cfg)
    if cfg.output_path:
        write_reports(result.reports, cfg.output_path, cfg.output_format)
    else:
        out.write(format_reports(result.reports, cfg.output_format))
    logger.info("%d subsets, %d reports, %d hard failures",
                result.subset_count, len(result.reports),
                result.hard_failures)
    return 1 if result.hard_failures else 0


def cmd_extremal(q, l, cap, mass, oracle=False, out=sys.stdout):
    """Prints the minimum E and the nonzero weights. l is first reduced to an
    equivalent offset in [0, (q - 1) / 2]. With oracle set the problem is
    re-solved by linear programming (and vertex enumeration for q <= 16)."""
    prob = ExtremalCosineProblem.canonical(q, l, cap, mass)
    value, weights = minimize_weighted_cosine(prob)
    print("q=%d l=%d cap=%s mass=%s E=%.12f" % (
        prob.q, prob.l, format_value(prob.cap), format_value(prob.mass),
        value), file=out)
    for j, weight in enumerate(weights):
        if weight:
            print("  w[%d]=%s" % (j, format_value(weight)), file=out)
    if oracle:
        oracles = [('lp', solve_weighted_cosine_lp(prob)[0])]
        if prob.q <= _ENUMERATION_LIMIT:
            oracles.append(('vertices', enumerate_weighted_cosine(prob)[0]))
        for name, other in oracles:
            print("oracle %s E=%.12f" % (name, other), file=out)
            if abs(other - value) > _ORACLE_TOLERANCE:
                raise LabError(ErrorCode.INCONSISTENT,
                               "%s oracle %r != greedy %r"
                               % (name, other, value))
    return 0


def _sweep_config(args):
    cfg = SweepConfig()
    if args.config:
        cfg = load_config(args.config, cfg)
    cfg = copy.copy(cfg)
    overrides = [
        ('max_order', args.max_order), ('samples_per_group', args.samples),
        ('rng_seed', args.seed), ('output_path', args.out),
        ('workers', args.workers), ('exhaustive_limit', args.exhaustive_limit),
        ('char_budget', args.char_budget),
    ]
    for attr, value in overrides:
        if value is not None:
            setattr(cfg, attr, value)
    if args.checks is not None:
        cfg.checks = parse_checks(args.checks)
    if args.format is not None:
        cfg.output_format = OutputFormat[args.format.upper()]
    if args.emit is not None:
        cfg.emit = EmitMode[args.emit.upper()]
    cfg.validate()
    return cfg


def build_parser():
    parser = argparse.ArgumentParser(
        prog='sumfree-lab',
        description="Exact computations and inequality checks for sum-free "
                    "sets in finite abelian groups.")
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help="-v for progress, -vv for search statistics")
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    p = commands.add_parser('mu', help="type and mu(G)")
    p.add_argument('group', help="group spec, e.g. 12 or 2,6")

    p = commands.add_parser('classify', help="type of G")
    p.add_argument('group')

    p = commands.add_parser('census', help="|SF(G)|, sigma(G) and mu(G)")
    p.add_argument('groups', nargs='+', metavar='group')
    p.add_argument('--workers', type=int, default=1)

    p = commands.add_parser('maxsf', help="a largest sum-free subset")
    p.add_argument('group')

    p = commands.add_parser('schur', help="Schur-triple count of a subset")
    p.add_argument('group')
    p.add_argument('subset', nargs='?', default='',
                   help="rank indices 1,2,3 or hex mask 0xE")

    p = commands.add_parser('verify', help="run a verification sweep")
    p.add_argument('--config', help="key = value settings file")
    p.add_argument('--max-order', type=int)
    p.add_argument('--samples', type=int)
    p.add_argument('--seed', type=int)
    p.add_argument('--checks', help="comma-separated check names or all")
    p.add_argument('--out')
    p.add_argument('--format', choices=['csv', 'jsonl'])
    p.add_argument('--workers', type=int)
    p.add_argument('--exhaustive-limit', type=int)
    p.add_argument('--char-budget', type=int)
    p.add_argument('--emit', choices=['all', 'failures'])

    p = commands.add_parser('extremal',
                            help="minimize the weighted cosine sum")
    p.add_argument('--q', type=int, required=True)
    p.add_argument('--l', type=int, default=0)
    p.add_argument('--cap', type=Fraction)
    p.add_argument('--mass', type=Fraction)
    p.add_argument('--c', type=Fraction,
                   help="capacity constant used when --cap and --mass are "
                        "omitted (default from the constants)")
    p.add_argument('--oracle', action='store_true')
    return parser


def _extremal_bounds(args):
    """Returns (cap, mass): the flags, or the instance of the density
    argument for q built from the capacity constant c."""
    if args.cap is not None and args.mass is not None:
        return args.cap, args.mass
    if args.cap is not None or args.mass is not None:
        raise LabError(ErrorCode.BADPARAMETER,
                       "--cap and --mass must be given together")
    constants = ConstantsConfig()
    if args.c is not None:
        constants = ConstantsConfig(c=args.c)
    prob = ExtremalCosineProblem.from_config(constants, args.q, 0)
    return prob.cap, prob.mass


def _configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s %(name)s: %(message)s")


def run(args, out=sys.stdout):
    """Dispatches parsed arguments to the cmd_* functions."""
    if args.command == 'mu':
        return cmd_mu(args.group, out)
    if args.command == 'classify':
        return cmd_classify(args.group, out)
    if args.command == 'census':
        return cmd_census(args.groups, args.workers, out)
    if args.command == 'maxsf':
        return cmd_maxsf(args.group, out)
    if args.command == 'schur':
        return cmd_schur(args.group, args.subset, out)
    if args.command == 'verify':
        return cmd_verify(_sweep_config(args), out)
    cap, mass = _extremal_bounds(args)
    return cmd_extremal(args.q, args.l, cap, mass, args.oracle, out)


def main(argv=None):
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return run(args, sys.stdout)
    except LabError as e:
        print("sumfree-lab: %s" % e, file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
