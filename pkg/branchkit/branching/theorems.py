###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import logging
from fractions import Fraction
from typing import List, Optional

from ..oops import DomainError
from ..utils.constants import Measure, SeriesKind, SubgroupKind
from ..spectrum import (ComponentIndex, ParamSet, SeriesTag, Spectrum, SpectrumComponent, a_minus_set, a_plus_set,
                        gl2r_discrete_params)
from .request import BranchRequest

__all__ = ['REGIME_BOUNDARY', 'GENERIC_IRREDUCIBILITY', 'branch_to_K', 'branch_to_h1', 'branch_to_h2',
           'branch_to_h3', 'branch_to_h4', 'branch_to_h5', 'branch_to_h6', 'branch']

REGIME_BOUNDARY = 'regime-boundary: big subquotient for t <= -p-|k|, K-types taken from the generic display'
GENERIC_IRREDUCIBILITY = 'irreducible for t not in {0, i*lambda, -i*lambda}'


def _expect(req: BranchRequest, subgroup: SubgroupKind) -> BranchRequest:
    if req.subgroup is not subgroup:
        raise DomainError(message=f'request is for {req.subgroup}, not {subgroup}', subgroup=str(req.subgroup))
    return req.validate()


def _continuous(group: str, series: SeriesTag, multiplicity: int, index: Optional[ComponentIndex] = None,
                annotations=()) -> SpectrumComponent:
    return SpectrumComponent(group, series, ParamSet.imaginary_halfline(), multiplicity, Measure.LEBESGUE,
                             index=index, annotations=tuple(annotations))


def _discrete(group: str, series: SeriesTag, params: ParamSet, annotations=()) -> List[SpectrumComponent]:
    if params.is_empty:
        return []
    return [SpectrumComponent(group, series, params, 1, Measure.COUNTING, annotations=tuple(annotations))]


def branch_to_K(req: BranchRequest) -> Spectrum:
    """ Restriction to U(n): every H^{a,b}(C^n) with a - b = -k once.

    The family is parametrised by the total degree d = a + b in |k| + 2N0.

    Parameters
    ----------
    req: (BranchRequest) a request for K

    Returns
    -------
    (Spectrum) one countable component
    """

    req = _expect(req, SubgroupKind.K)
    series = SeriesTag.of(SeriesKind.HARMONIC, n=req.n, k=req.k)
    degrees = ParamSet.progression(abs(req.k), 2, abs(req.k) - 1, None)
    return Spectrum(req.describe(), tuple(_discrete(f'U({req.n})', series, degrees)))


def branch_to_h1(req: BranchRequest, p: Optional[int] = None, q: Optional[int] = None) -> Spectrum:
    """ Restriction to GL(p,C) x GL(q,C).

    For every k' in Z one direct integral over lambda' in R of
    pi_{i lambda', k'} x pi_{i(lambda - lambda'), k - k'}, multiplicity one.
    """

    if p is not None or q is not None:
        req = BranchRequest(req.n, req.subgroup, req.k, req.lam, p=p, q=q)
    req = _expect(req, SubgroupKind.H1)
    series = SeriesTag.of(SeriesKind.TENSOR_PRODUCT, p=req.p, q=req.q, k=req.k, **{'lambda': req.lam})
    component = SpectrumComponent(f'GL({req.p},C)xGL({req.q},C)', series, ParamSet.real_line(), 1, Measure.LEBESGUE,
                                  index=ComponentIndex("k'", ParamSet.progression(0, 1)))
    return Spectrum(req.describe(), (component,))


def _subquotients(group: str, p: int, q: int, k: int, sign: str, display: str, params: ParamSet,
                  annotations=()) -> List[SpectrumComponent]:
    series = SeriesTag.of(SeriesKind.SUBQUOTIENT, p=p, q=q, k=k, sign=sign, display=display)
    return _discrete(group, series, params, annotations)


def _rank_one_split(group: str, p: int, q: int, k: int, sign: str, params: ParamSet) -> List[SpectrumComponent]:
    """ Complementary series, big subquotients and the regime boundary for U(r,1) with r = max(p, q).
    """

    r = max(p, q)
    gap = r - abs(k)
    components = []
    if gap > 0:
        series = SeriesTag.of(SeriesKind.PRINCIPAL_SERIES, p=p, q=q, k=k, sign=sign, form='complementary')
        components += _discrete(group, series, params.intersect(-gap, 0))
    edge = -r - abs(k)
    components += _subquotients(group, p, q, k, sign, 'big', params.intersect(edge, min(0, Fraction(1, 2) - gap)))
    components += _subquotients(group, p, q, k, sign, 'big', params.intersect(None, edge + Fraction(1, 2)),
                                annotations=(REGIME_BOUNDARY,))
    return components


def branch_to_h2(req: BranchRequest, p: Optional[int] = None, q: Optional[int] = None) -> Spectrum:
    """ Restriction to U(p,q).

    Discrete subquotients pi_{t,k,+} over A_+^k(p,q) and pi_{t,k,-} over
    A_-^k(p,q), plus twice the unitary principal series over iR+.

    Parameters
    ----------
    req: (BranchRequest) a request for H2
    p: (Optional[int]) overrides ``req.p``
    q: (Optional[int]) overrides ``req.q``

    Returns
    -------
    (Spectrum) the discrete families, split by K-type regime, and the continuum
    """

    if p is not None or q is not None:
        req = BranchRequest(req.n, req.subgroup, req.k, req.lam, p=p, q=q)
    req = _expect(req, SubgroupKind.H2)
    p, q, k = req.p, req.q, req.k
    group = f'U({p},{q})'
    plus, minus = a_plus_set(p, q, k), a_minus_set(p, q, k)

    if p > 1 and q > 1:
        components = _subquotients(group, p, q, k, '+', 'big', plus) + _subquotients(group, p, q, k, '-', 'big', minus)
    elif p > 1:
        components = _rank_one_split(group, p, q, k, '+', plus) + _subquotients(group, p, q, k, '-', 'small', minus)
    elif q > 1:
        components = (_subquotients(group, p, q, k, '+', 'small-mirrored', plus)
                      + _rank_one_split(group, p, q, k, '-', minus))
    else:
        components = (_subquotients(group, p, q, k, '+', 'small-mirrored', plus)
                      + _subquotients(group, p, q, k, '-', 'small', minus))

    series = SeriesTag.of(SeriesKind.PRINCIPAL_SERIES, p=p, q=q, k=k)
    components.append(_continuous(group, series, 2))
    logging.info(f'{req.describe()}: {len(components) - 1} discrete families')
    return Spectrum(req.describe(), tuple(components))


def branch_to_h3(req: BranchRequest, m: Optional[int] = None) -> Spectrum:
    """ Restriction to Sp(m,C): irreducible unless (lambda, k) = (0, 0), where it splits in two.
    """

    if m is not None:
        req = BranchRequest(req.n, req.subgroup, req.k, req.lam, m=m)
    req = _expect(req, SubgroupKind.H3)
    group = f'Sp({req.m},C)'
    if req.lam != 0 or req.k != 0:
        series = SeriesTag.of(SeriesKind.PRINCIPAL_SERIES, m=req.m, k=req.k, **{'lambda': req.lam})
        return Spectrum(req.describe(), tuple(_discrete(group, series, ParamSet.finite([req.lam]))))
    components = []
    for sign in ('+', '-'):
        series = SeriesTag.of(SeriesKind.SUBQUOTIENT, m=req.m, k=0, sign=sign, **{'lambda': 0})
        components += _discrete(group, series, ParamSet.finite([0]))
    return Spectrum(req.describe(), tuple(components))


def branch_to_h4(req: BranchRequest, m: Optional[int] = None) -> Spectrum:
    """ Restriction to GL(m,H): pi_{i lambda, j} for j >= |k|, j = k mod 2.
    """

    if m is not None:
        req = BranchRequest(req.n, req.subgroup, req.k, req.lam, m=m)
    req = _expect(req, SubgroupKind.H4)
    series = SeriesTag.of(SeriesKind.PRINCIPAL_SERIES, m=req.m, k=req.k, **{'lambda': req.lam})
    params = ParamSet.progression(abs(req.k), 2, abs(req.k) - 1, None)
    return Spectrum(req.describe(), tuple(_discrete(f'GL({req.m},H)', series, params)))


def branch_to_h5(req: BranchRequest) -> Spectrum:
    """ Restriction to O(n,C): for each j >= 0, j = k mod 2, one integral over iR+; no discrete part.
    """

    req = _expect(req, SubgroupKind.H5)
    series = SeriesTag.of(SeriesKind.PRINCIPAL_SERIES, n=req.n, k=req.k, **{'lambda': req.lam})
    index = ComponentIndex('j', ParamSet.progression(req.k % 2, 2, -1, None))
    return Spectrum(req.describe(), (_continuous(f'O({req.n},C)', series, 1, index=index),))


def branch_to_h6(req: BranchRequest) -> Spectrum:
    """ Restriction to GL(n,R), n >= 3.

    Discrete part induced from the first parabolic over t in
    gl2r_discrete_params(k); continuous part induced from the second
    parabolic over iR+, multiplicity two. The sign parameter of the
    discrete-series data is normalised to 0.

    Parameters
    ----------
    req: (BranchRequest) a request for H6

    Returns
    -------
    (Spectrum) the spectrum

    Raises
    ------
    RoutedError for n = 2, which is H2(1,1)
    """

    req = _expect(req, SubgroupKind.H6)
    group = f'GL({req.n},R)'
    eps = req.k % 2
    discrete = SeriesTag.of(SeriesKind.INDUCED, n=req.n, k=req.k, level=1, eps=eps, delta=0,
                            **{'lambda': req.lam})
    continuous = SeriesTag.of(SeriesKind.INDUCED, n=req.n, k=req.k, level=2, eps=eps, **{'lambda': req.lam})
    components = _discrete(group, discrete, gl2r_discrete_params(req.k))
    components.append(_continuous(group, continuous, 2, annotations=(GENERIC_IRREDUCIBILITY,)))
    return Spectrum(req.describe(), tuple(components))


_CONSTRUCTORS = {
    SubgroupKind.K: branch_to_K,
    SubgroupKind.H1: branch_to_h1,
    SubgroupKind.H2: branch_to_h2,
    SubgroupKind.H3: branch_to_h3,
    SubgroupKind.H4: branch_to_h4,
    SubgroupKind.H5: branch_to_h5,
    SubgroupKind.H6: branch_to_h6,
}


def branch(req: BranchRequest) -> Spectrum:
    """ Dispatch a request to its constructor.
    """

    return _CONSTRUCTORS[req.subgroup](req.validate())
