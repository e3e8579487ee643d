###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import logging
import time
from multiprocessing import Pool
from typing import Dict, List, Optional, Tuple

from ..oops import BranchkitError, DomainError, ResourceLimitError
from ..utils import constants
from ..utils.constants import SUITE_DEFAULTS, Suite
from ..common import Report, ReportSet
from .verifiers import (verify_h3_split, verify_o2_spaces, verify_param_sets, verify_sp1_bundle,
                        verify_sp_multiplicity, verify_thm_k)
from .support import verify_support

__all__ = ['suite_cells', 'run_cell', 'run_suite']

Cell = Tuple[str, Dict]

_VERIFIERS = {
    'thmK': verify_thm_k,
    'spmult': verify_sp_multiplicity,
    'h3split': verify_h3_split,
    'sp1': verify_sp1_bundle,
    'o2': verify_o2_spaces,
    'support': verify_support,
    'paramsets': verify_param_sets,
}


def _span(bounds: Tuple[int, int]) -> range:
    return range(bounds[0], bounds[1] + 1)


def _support_cells(options: Dict) -> List[Cell]:
    n_lo, n_hi = options['n']
    degree = options['max_degree']
    cells = []
    for k in _span(options['k']):
        for n in _span((n_lo, n_hi)):
            for p in range(1, n):
                cells.append(('support', {'theorem': 'H1', 'params': {'n': n, 'p': p, 'q': n - p, 'k': k},
                                          'dmax': degree}))
            if n == 4:
                cells.append(('support', {'theorem': 'H2', 'params': {'n': 4, 'p': 2, 'q': 2, 'k': k},
                                          'dmax': degree}))
            if n >= 3:
                cells.append(('support', {'theorem': 'H5', 'params': {'n': n, 'k': k}, 'dmax': degree}))
        for m in _span(options['m']):
            for theorem in ('H3', 'H4'):
                cells.append(('support', {'theorem': theorem, 'params': {'n': 2 * m, 'm': m, 'k': k},
                                          'dmax': degree}))
        cells.append(('support', {'theorem': 'H6', 'params': {'n': max(3, n_lo), 'k': k}, 'dmax': degree}))
    return cells


def _check_rank(suite: Suite, merged: Dict):
    # U(n) and SO(2n) for n; U(2m) and SO(4m) for m
    ranks = [merged['n'][1]] if 'n' in merged else []
    if 'm' in merged:
        ranks.append(2 * merged['m'][1])
    if ranks and max(ranks) > constants.RANK_CAP:
        raise ResourceLimitError(message='rank above the configured cap', suite=str(suite), rank=max(ranks),
                                 cap=constants.RANK_CAP)


def suite_cells(suite, options: Optional[Dict] = None) -> List[Cell]:
    """ Grid cells of a suite, ``SUITE_DEFAULTS`` overridden by ``options``.

    Parameters
    ----------
    suite: (Suite) the suite, ``all`` for every suite
    options: (Optional[Dict]) ranges as (lo, hi) tuples under 'n', 'm', 'k' and 'max_degree'

    Returns
    -------
    (List[Tuple[str, Dict]]) verifier name and keyword arguments per cell
    """

    suite = Suite(str(suite))
    if suite is Suite.ALL:
        return [cell for name in _VERIFIERS for cell in suite_cells(name, options)]
    merged = dict(SUITE_DEFAULTS[str(suite)])
    merged.update({key: value for key, value in (options or {}).items() if value is not None and key in merged})
    degree = merged.get('max_degree')
    _check_rank(suite, merged)

    if suite is Suite.THM_K:
        return [('thmK', {'n': n, 'k': k, 'dmax': degree}) for n in _span(merged['n']) for k in _span(merged['k'])]
    if suite is Suite.SP_MULT:
        return [('spmult', {'m': m, 'jmax': degree}) for m in _span(merged['m'])]
    if suite is Suite.H3_SPLIT:
        return [('h3split', {'m': m, 'dmax': degree}) for m in _span(merged['m'])]
    if suite is Suite.SP1:
        return [('sp1', {'k': k, 'jmax': degree}) for k in _span(merged['k'])]
    if suite is Suite.O2:
        return [('o2', {'jmax': degree})]
    if suite is Suite.SUPPORT:
        return _support_cells(merged)
    return [('paramsets', {})]


def _claim_of(name: str, kwargs: Dict) -> Tuple[str, Dict]:
    """ Claim id and report params as the verifier itself would build them.
    """

    if name == 'support':
        return f"support:{kwargs['theorem']}", dict(kwargs['params'], max_degree=kwargs['dmax'])
    params = {}
    for key, value in kwargs.items():
        params['max_degree' if key in ('dmax', 'jmax') else key] = value
    return name, params


def run_cell(cell: Cell) -> Report:
    """ Run one cell. An exhausted degree budget skips the cell, any other
    library error becomes a failed report carrying the error.
    """

    name, kwargs = cell
    start = time.perf_counter()
    try:
        report = _VERIFIERS[name](**kwargs)
    except ResourceLimitError as error:
        report = Report.skipped(*_claim_of(name, kwargs), str(error))
    except BranchkitError as error:
        report = Report.failed(*_claim_of(name, kwargs), {'error': type(error).__name__, 'message': str(error)})
    report.millis = int((time.perf_counter() - start) * 1000)
    logging.info(f'{report.status} {report.claim} {report.params} in {report.millis} ms')
    return report


def run_suite(suite, options: Optional[Dict] = None, jobs: int = 1) -> ReportSet:
    """ Run every cell of a suite, in parallel when ``jobs`` > 1.

    Parameters
    ----------
    suite: (Suite) the suite
    options: (Optional[Dict]) grid overrides, see ``suite_cells``
    jobs: (int) worker processes

    Returns
    -------
    (ReportSet) reports ordered by claim and parameters
    """

    if jobs < 1:
        raise DomainError(message='jobs must be positive', jobs=jobs)
    cells = suite_cells(suite, options)
    if jobs == 1:
        reports = [run_cell(cell) for cell in cells]
    else:
        with Pool(jobs) as pool:
            pending = [pool.apply_async(run_cell, (cell,)) for cell in cells]
            reports = [result.get() for result in pending]
    report_set = ReportSet.build(reports)
    logging.info(f'suite {suite}: {report_set.counts()}')
    return report_set
