###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import pytest

from branchkit.utils.constants import Status
from branchkit.verification import *


@pytest.mark.parametrize('theorem, params, dmax', [
    ('H1', {'n': 2, 'p': 1, 'q': 1, 'k': 0}, 2),
    ('H1', {'n': 3, 'p': 1, 'q': 2, 'k': 1}, 3),
    ('H2', {'n': 4, 'p': 2, 'q': 2, 'k': 0}, 2),
    ('H3', {'n': 4, 'm': 2, 'k': 0}, 2),
    ('H3', {'n': 2, 'm': 1, 'k': 1}, 4),
    ('H4', {'n': 2, 'm': 1, 'k': 0}, 4),
    ('H5', {'n': 3, 'k': 0}, 2),
    ('H6', {'n': 3, 'k': 4}, 5),
])
def test_support(theorem, params, dmax):
    report = verify_support(theorem, params, dmax)
    assert report.claim == f'support:{theorem}'
    assert report.status is Status.PASS, report.witness
    assert report.params['max_degree'] == dmax


@pytest.mark.parametrize('k', [-2, -1, 0, 1, 2])
def test_rank_two_support(k):
    cells = [
        ('H2', {'n': 4, 'p': 2, 'q': 2, 'k': k}),
        ('H4', {'n': 4, 'm': 2, 'k': k}),
        ('H5', {'n': 4, 'k': k}),
    ]
    for theorem, params in cells:
        report = verify_support(theorem, params, 4)
        assert report.status is Status.PASS, (theorem, report.witness)


def test_h6_support_notes_unverified_irreducibility():
    report = verify_support('H6', {'n': 3, 'k': 0}, 4)
    assert report.status is Status.PASS
    assert report.notes['unverified']
