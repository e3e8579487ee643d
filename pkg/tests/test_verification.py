###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import pytest

from branchkit.common import Report, ReportSet
from branchkit.oops import DomainError, NotACharacterError, ResourceLimitError
from branchkit.utils import constants
from branchkit.utils.constants import Status
from branchkit.verification import *


def test_theorem_k_restriction():
    assert verify_thm_k(2, 0, 4).status is Status.PASS
    assert verify_thm_k(3, 1, 3).status is Status.PASS
    assert verify_thm_k(2, -2, 4).status is Status.PASS


def test_symplectic_multiplicities():
    assert verify_sp_multiplicity(1, 4).status is Status.PASS
    assert verify_sp_multiplicity(2, 2).status is Status.PASS


def test_h3_split_certifies_low_degrees():
    report = verify_h3_split(2, 4)
    assert report.status is Status.PASS
    assert report.notes['certified'] > 0
    assert report.notes['uncertified'] == 0
    assert 'skipped' not in report.notes


def test_sp1_bundles():
    for k in (0, 1, -3):
        assert verify_sp1_bundle(k, 6).status is Status.PASS


def test_o2_spaces():
    assert verify_o2_spaces(6).status is Status.PASS
    assert o2_fixed_dimension(O2_SUBGROUPS['X1'], 0) == 1
    assert o2_fixed_dimension(O2_SUBGROUPS['X1'], 1) == 0
    assert o2_fixed_dimension(O2_SUBGROUPS['X1'], 2) == 1
    assert o2_fixed_dimension(O2_SUBGROUPS['X2'], 1) == 1
    assert o2_fixed_dimension(KLEIN_GROUP, 1, lambda element: int(element[0, 0])) == 1


def test_o2_rejects_non_characters():
    with pytest.raises(NotACharacterError):
        o2_fixed_dimension(O2_SUBGROUPS['X2'], 0, lambda element: 1 if element.det() == 1 else 0)


def test_param_sets():
    report = verify_param_sets()
    assert report.status is Status.PASS
    assert report.notes['cells'] == 4 * 4 * 17


def test_first_mismatch():
    assert first_mismatch({(1,): 1}, {(1,): 1}) is None
    assert first_mismatch({(1,): 1, (2,): 1}, {(1,): 1}) == {'weight': [2], 'found': 1, 'expected': 0}


def test_reports():
    with pytest.raises(DomainError):
        Report('thmK', {}, Status.FAIL)
    with pytest.raises(DomainError):
        Report('thmK', {}, Status.SKIPPED)
    report = Report.failed('thmK', {'n': 2}, {'weight': [1, -1]})
    report.millis = 12
    assert report.to_dict()['millis'] == 0
    assert report.to_dict(timing=True)['millis'] == 12
    assert Report.from_dict(report.to_dict(timing=True)).witness == {'weight': [1, -1]}
    assert str(report).startswith('FAIL')


def test_report_set_is_ordered():
    reports = ReportSet.build([Report.passed('sp1', {'k': 1}), Report.passed('o2', {}),
                               Report.passed('sp1', {'k': 0})])
    assert [r.claim for r in reports] == ['o2', 'sp1', 'sp1']
    assert reports[1].params == {'k': 0}
    assert reports.counts() == {'pass': 3, 'fail': 0, 'skipped': 0}
    assert not reports.has_failures


def test_report_set_filters_by_status():
    reports = ReportSet.build([Report.passed('o2', {}), Report.skipped('sp1', {'k': 0}, 'degree budget exceeded'),
                               Report.failed('thmK', {'n': 2}, {'weight': [1, 0]})])
    assert [r.claim for r in reports.with_status('skipped')] == ['sp1']
    assert [r.claim for r in reports.with_status(Status.FAIL)] == ['thmK']
    assert reports.failures() == list(reports.with_status('fail'))
    assert len(reports.with_status(Status.PASS)) == 1
    assert reports.has_failures


def test_suite_cells():
    cells = suite_cells('thmK', {'n': (2, 3), 'k': (0, 1), 'max_degree': 3})
    assert cells == [('thmK', {'n': n, 'k': k, 'dmax': 3}) for n in (2, 3) for k in (0, 1)]
    claims = {name for name, _ in suite_cells('all')}
    assert claims == {'thmK', 'spmult', 'h3split', 'sp1', 'o2', 'support', 'paramsets'}
    with pytest.raises(ValueError):
        suite_cells('nope')


def test_run_cell_turns_errors_into_failures():
    report = run_cell(('support', {'theorem': 'H3', 'params': {'n': 3, 'k': 0}, 'dmax': 2}))
    assert report.status is Status.FAIL
    assert report.witness['error'] == 'DomainError'
    assert report.claim == 'support:H3'
    assert report.params == {'n': 3, 'k': 0, 'max_degree': 2}


def test_run_cell_skips_on_an_exhausted_degree_budget(monkeypatch):
    monkeypatch.setenv(constants.DEGREE_CAP_ENV, '3')
    report = run_cell(('thmK', {'n': 2, 'k': 0, 'dmax': 6}))
    assert report.status is Status.SKIPPED
    assert 'degree budget exceeded' in report.reason
    assert report.params == {'n': 2, 'k': 0, 'max_degree': 6}


def test_suites_reject_ranks_above_the_cap(monkeypatch):
    with pytest.raises(ResourceLimitError):
        suite_cells('thmK', {'n': (2, 9)})
    with pytest.raises(ResourceLimitError):
        suite_cells('spmult', {'m': (1, 5)})
    monkeypatch.setattr(constants, 'RANK_CAP', 3)
    with pytest.raises(ResourceLimitError):
        run_suite('h3split', {'m': (2, 2)})
    assert len(suite_cells('sp1', {'k': (0, 1)})) == 2


def test_run_suite_in_parallel_is_deterministic():
    options = {'k': (-1, 1), 'max_degree': 4}
    serial = run_suite('sp1', options, jobs=1)
    parallel = run_suite('sp1', options, jobs=2)
    assert len(serial) == 3
    assert serial.to_list() == parallel.to_list()
    assert not parallel.has_failures
    with pytest.raises(DomainError):
        run_suite('sp1', options, jobs=0)
