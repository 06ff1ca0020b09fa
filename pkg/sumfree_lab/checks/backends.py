from __future__ import absolute_import, division, print_function
import logging

from builtins import *  # @UnusedWildImport

from sumfree_lab.checks.cosets import make_report, report_context
from sumfree_lab.enums import CheckName, ErrorCode
from sumfree_lab.errors import LabError
from sumfree_lab.fourier import (BACKENDS, schur_count_bruteforce,
                                 schur_count_fourier)

logger = logging.getLogger(__name__)


def check_backend_agreement(subset, table=None, char_table=None,
                            stats=None):
    """Compares the Schur-triple count of every Fourier backend with the
    pair scan.

    lhs is the largest difference from the pair-scan count (None when a
    backend returns a value too far from an integer) and rhs is 0.
    """
    if stats is None:
        stats = schur_count_bruteforce(subset, table)
    worst = 0
    for backend in BACKENDS:
        try:
            fourier = schur_count_fourier(subset, backend, char_table)
        except LabError as e:
            if e.errorcode != ErrorCode.INCONSISTENT:
                raise
            logger.warning("%s backend on %r: %s", backend, subset, e)
            worst = None
            break
        worst = max(worst, abs(fourier.ordered_triple_count
                               - stats.ordered_triple_count))
    holds = worst is not None and worst <= 0
    return make_report(CheckName.BACKEND_AGREEMENT, worst, 0, holds,
                       report_context(subset))
