###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import os
from enum import Enum, unique

from ..oops import DomainError

__all__ = ['DEBUG_MODE', 'RANK_CAP', 'DEGREE_CAP', 'DEGREE_CAP_ENV', 'STABILIZATION_WINDOW',
           'SUITE_DEFAULTS', 'get_degree_cap', 'BaseEnum', 'GroupFamily', 'HarmonicKind',
           'ParamKind', 'Measure', 'Status', 'EmitFormat', 'SubgroupKind', 'SeriesKind', 'Suite']

DEBUG_MODE = False

RANK_CAP = 8

DEGREE_CAP = 24
DEGREE_CAP_ENV = 'BRANCHKIT_DEGREE_CAP'

STABILIZATION_WINDOW = 3


def get_degree_cap() -> int:
    """ Degree budget for characters, ``BRANCHKIT_DEGREE_CAP`` overriding the default.

    Returns
    -------
    (int) the largest admissible total exponent degree
    """

    raw = os.environ.get(DEGREE_CAP_ENV)
    if raw is None or raw.strip() == '':
        return DEGREE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise DomainError(message=f'{DEGREE_CAP_ENV} must be an integer', value=raw)
    if cap < 0:
        raise DomainError(message=f'{DEGREE_CAP_ENV} must be non-negative', value=raw)
    return cap


class BaseEnum(Enum):
    def __str__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, Enum):
            return self is other
        return other == self.value

    def __hash__(self):
        return hash(self.value)


@unique
class GroupFamily(BaseEnum):
    U = 'U'
    SO = 'SO'
    O = 'O'
    SP = 'Sp'
    SU2 = 'SU2'


@unique
class HarmonicKind(BaseEnum):
    REAL = 'R'
    COMPLEX = 'C'
    QUATERNIONIC = 'H'
    SU2 = 'SU2'


@unique
class ParamKind(BaseEnum):
    EMPTY = 'empty'
    FINITE = 'finite'
    PROGRESSION = 'progression'
    IMAGINARY_HALFLINE = 'imaginary-halfline'
    REAL_LINE = 'real-line'


@unique
class Measure(BaseEnum):
    COUNTING = 'counting'
    LEBESGUE = 'lebesgue'


@unique
class Status(BaseEnum):
    PASS = 'pass'
    FAIL = 'fail'
    SKIPPED = 'skipped'


@unique
class EmitFormat(BaseEnum):
    TEXT = 'text'
    JSON = 'json'


@unique
class SubgroupKind(BaseEnum):
    K = 'K'
    H1 = 'H1'
    H2 = 'H2'
    H3 = 'H3'
    H4 = 'H4'
    H5 = 'H5'
    H6 = 'H6'


@unique
class SeriesKind(BaseEnum):
    HARMONIC = 'Harmonic'
    PRINCIPAL_SERIES = 'PrincipalSeries'
    TENSOR_PRODUCT = 'TensorProduct'
    SUBQUOTIENT = 'Subquotient'
    INDUCED = 'InducedFromParabolic'


@unique
class Suite(BaseEnum):
    THM_K = 'thmK'
    SP_MULT = 'spmult'
    H3_SPLIT = 'h3split'
    SP1 = 'sp1'
    O2 = 'o2'
    SUPPORT = 'support'
    PARAM_SETS = 'paramsets'
    ALL = 'all'


SUITE_DEFAULTS = {
    'thmK': {'n': (2, 4), 'k': (-3, 3), 'max_degree': 6},
    'spmult': {'m': (1, 3), 'max_degree': 6},
    'h3split': {'m': (2, 2), 'max_degree': 6},
    'sp1': {'k': (-6, 6), 'max_degree': 12},
    'o2': {'max_degree': 12},
    'support': {'n': (2, 4), 'm': (1, 2), 'k': (-2, 2), 'max_degree': 4},
    'paramsets': {},
}
