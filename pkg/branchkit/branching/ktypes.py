###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import re
from fractions import Fraction
from typing import Dict, List, Optional, Set

from ..oops import DomainError, NoKTypeOracleError
from ..utils.constants import SeriesKind
from ..lattice import Group, Weight, concat_weights, dominant_weights, make_group, orthogonal, symplectic, unitary
from ..characters import (complex_line_in_symplectic, frobenius_multiplicity, levi_diagonal, quaternionic_line,
                          rotation_block)
from ..harmonics import HarmonicLabel, harmonic_weight, line_bundle_labels
from ..spectrum import SpectrumComponent

__all__ = ['ktype_group', 'ktype_multiplicities', 'ktype_support', 'big_display', 'small_display',
           'sp_split_family']

Multiplicities = Dict[Weight, int]


def _add(found: Multiplicities, weight: Weight, multiplicity: int = 1):
    found[weight] = found.get(weight, 0) + multiplicity


def _complex_weight(n: int, alpha: int, beta: int) -> Optional[Weight]:
    label = HarmonicLabel.complex(n, alpha, beta)
    if label.is_zero:
        return None
    return harmonic_weight(label)[1]


def _line_weight(beta: int) -> Weight:
    """ H^beta(C): H^{beta,0} for beta >= 0, H^{0,-beta} otherwise.
    """

    return Weight((beta,))


def _frobenius_support(ambient: Group, emb, tau, dmax: int) -> Multiplicities:
    found: Multiplicities = {}
    for sigma in dominant_weights(ambient, dmax):
        multiplicity = frobenius_multiplicity(ambient, sigma, emb.sub, emb, tau)
        if multiplicity:
            _add(found, sigma, multiplicity)
    return found


def _values(component: SpectrumComponent, param, bound) -> List[Fraction]:
    if param is not None:
        if param not in component.params:
            raise DomainError(message='parameter is not in the component', param=param, params=str(component.params))
        return [Fraction(param)]
    return component.params.elements(bound)


def _index_values(component: SpectrumComponent, param, bound) -> List[int]:
    if param is not None:
        if param not in component.index.params:
            raise DomainError(message='index value is not in the family', param=param,
                              index=str(component.index.params))
        return [int(param)]
    return [int(v) for v in component.index.params.elements(bound)]


def _thm_k(component: SpectrumComponent, dmax: int, param) -> Multiplicities:
    n, k = component.series.get_int('n'), component.series.get_int('k')
    found: Multiplicities = {}
    for d in _values(component, param, dmax):
        d = int(d)
        if d > dmax:
            continue
        weight = _complex_weight(n, (d - k) // 2, (d + k) // 2)
        if weight is not None:
            _add(found, weight)
    return found


def _h1(component: SpectrumComponent, dmax: int, param) -> Multiplicities:
    """ pi_{k'} x pi_{k-k'} restricted to U(p) x U(q): line-bundle sections of both spheres.
    """

    p, q, k = (component.series.get_int(key) for key in ('p', 'q', 'k'))
    found: Multiplicities = {}
    for k1 in _index_values(component, param, dmax):
        for first in line_bundle_labels(p, k1, dmax):
            for second in line_bundle_labels(q, k - k1, dmax - first.degree):
                _add(found, concat_weights(harmonic_weight(first)[1], harmonic_weight(second)[1]))
    return found


def big_display(p: int, q: int, k: int, t: Fraction, sign: int, dmax: int) -> Multiplicities:
    """ U(p) x U(q)-types H^{a,j-a}(C^p) x H^{b,l-b}(C^q) with sign*(j-l+p-q) > |t|
    and 2(a+b) = j+l-k, of degree j + l <= dmax.
    """

    found: Multiplicities = {}
    for j in range(dmax + 1):
        for ell in range(dmax - j + 1):
            if sign * (j - ell + p - q) <= abs(t):
                continue
            for a in range(j + 1):
                for b in range(ell + 1):
                    if 2 * (a + b) != j + ell - k:
                        continue
                    first, second = _complex_weight(p, a, j - a), _complex_weight(q, b, ell - b)
                    if first is not None and second is not None:
                        _add(found, concat_weights(first, second))
    return found


def small_display(r: int, k: int, t: Fraction, dmax: int, mirrored: bool = False) -> Multiplicities:
    """ U(r) x U(1)-types H^{a1,a2}(C^r) x H^b(C) of the small subquotient of U(r,1).

    a1 - a2 + b = -k and a1 + a2 + b <= t - r for k > 0, a1 + a2 - b <= t - r
    for k < 0. ``mirrored`` lists them as U(1) x U(r)-types.
    """

    found: Multiplicities = {}
    if k == 0:
        return found
    for a1 in range(dmax + 1):
        for a2 in range(dmax - a1 + 1):
            b = -k - a1 + a2
            if a1 + a2 + abs(b) > dmax:
                continue
            bound = a1 + a2 + b if k > 0 else a1 + a2 - b
            if bound > t - r:
                continue
            weight = _complex_weight(r, a1, a2)
            if weight is None:
                continue
            pieces = (_line_weight(b), weight) if mirrored else (weight, _line_weight(b))
            _add(found, concat_weights(*pieces))
    return found


def _h2(component: SpectrumComponent, dmax: int, param) -> Multiplicities:
    series = component.series
    p, q, k = (series.get_int(key) for key in ('p', 'q', 'k'))
    if series.kind is SeriesKind.PRINCIPAL_SERIES:
        emb = levi_diagonal(p, q)
        tau = Weight((-k,) + (0,) * (emb.sub.rank - 1))
        found = _frobenius_support(make_group([unitary(p), unitary(q)]), emb, tau, dmax)
        if component.params.is_countable:
            count = len(_values(component, param, dmax + p + q + abs(k) + 1))
            found = {weight: multiplicity * count for weight, multiplicity in found.items()}
        return found

    sign = 1 if series.get('sign') == '+' else -1
    display = series.get('display')
    found: Multiplicities = {}
    for t in _values(component, param, dmax + p + q + abs(k) + 1):
        if display == 'big':
            part = big_display(p, q, k, t, sign, dmax)
        elif display == 'small':
            part = small_display(p, k, t, dmax)
        else:
            part = small_display(q, k, t, dmax, mirrored=True)
        for weight, multiplicity in part.items():
            _add(found, weight, multiplicity)
    return found


def sp_split_family(m: int, residue: int, dmax: int) -> Multiplicities:
    """ Sp(m)-types H^{a,b}(H^m) with a - b = residue mod 4 and a + b <= dmax.
    """

    found: Multiplicities = {}
    for a in range(dmax + 1):
        for b in range(min(a, dmax - a) + 1 if m > 1 else 1):
            if (a - b) % 4 == residue:
                _add(found, harmonic_weight(HarmonicLabel.quaternionic(m, a, b))[1])
    return found


def _h3(component: SpectrumComponent, dmax: int, param) -> Multiplicities:
    m, k = component.series.get_int('m'), component.series.get_int('k')
    if component.series.kind is SeriesKind.SUBQUOTIENT:
        return sp_split_family(m, 0 if component.series.get('sign') == '+' else 2, dmax)
    emb = complex_line_in_symplectic(m)
    return _frobenius_support(symplectic(m), emb, Weight((-k,) + (0,) * (m - 1)), dmax)


def _h4(component: SpectrumComponent, dmax: int, param) -> Multiplicities:
    m = component.series.get_int('m')
    emb = quaternionic_line(m)
    found: Multiplicities = {}
    for j in _values(component, param, dmax):
        part = _frobenius_support(symplectic(m), emb, Weight((int(j),) + (0,) * (m - 1)), dmax)
        for weight, multiplicity in part.items():
            _add(found, weight, multiplicity)
    return found


def _h5(component: SpectrumComponent, dmax: int, param) -> Multiplicities:
    n = component.series.get_int('n')
    found: Multiplicities = {}
    for j in _index_values(component, param, dmax):
        if n == 2:
            _add(found, Weight((j,)))
            continue
        emb = rotation_block(n)
        part = _frobenius_support(orthogonal(n), emb, Weight((j,) + (0,) * (emb.sub.rank - 1)), dmax)
        for weight, multiplicity in part.items():
            _add(found, weight, multiplicity)
    return found


def _h6(component: SpectrumComponent, dmax: int, param) -> Multiplicities:
    """ O(2)-types of the Levi data: H^j(R^2) with j > t, j = t+1 mod 2 for the
    discrete series, j = eps mod 2 for the continuous family.
    """

    series = component.series
    found: Multiplicities = {}
    if series.get_int('level') == 1:
        for t in _values(component, param, dmax):
            for j in range(int(t) + 1, dmax + 1, 2):
                _add(found, Weight((j,)))
        return found
    for j in range(series.get_int('eps'), dmax + 1, 2):
        _add(found, Weight((j,)))
    return found


def _group_args(component: SpectrumComponent) -> List[int]:
    return [int(v) for v in re.findall(r'\d+', component.group)]


_ORACLES = [
    (re.compile(r'^U\(\d+\)$'), {SeriesKind.HARMONIC}, _thm_k,
     lambda c: unitary(*_group_args(c))),
    (re.compile(r'^GL\(\d+,C\)xGL\(\d+,C\)$'), {SeriesKind.TENSOR_PRODUCT}, _h1,
     lambda c: make_group([unitary(n) for n in _group_args(c)])),
    (re.compile(r'^U\(\d+,\d+\)$'), {SeriesKind.SUBQUOTIENT, SeriesKind.PRINCIPAL_SERIES}, _h2,
     lambda c: make_group([unitary(n) for n in _group_args(c)])),
    (re.compile(r'^Sp\(\d+,C\)$'), {SeriesKind.SUBQUOTIENT, SeriesKind.PRINCIPAL_SERIES}, _h3,
     lambda c: symplectic(*_group_args(c))),
    (re.compile(r'^GL\(\d+,H\)$'), {SeriesKind.PRINCIPAL_SERIES}, _h4,
     lambda c: symplectic(*_group_args(c))),
    (re.compile(r'^O\(\d+,C\)$'), {SeriesKind.PRINCIPAL_SERIES}, _h5,
     lambda c: orthogonal(*_group_args(c))),
    (re.compile(r'^GL\(\d+,R\)$'), {SeriesKind.INDUCED}, _h6,
     lambda c: orthogonal(2)),
]


def _oracle(component: SpectrumComponent):
    for pattern, kinds, oracle, group in _ORACLES:
        if pattern.match(component.group) and component.series.kind in kinds:
            return oracle, group
    raise NoKTypeOracleError(message='no K-type oracle for this component', group=component.group,
                             series=str(component.series))


def ktype_group(component: SpectrumComponent) -> Group:
    """ The compact group whose weights ``ktype_support`` returns for ``component``.
    """

    return _oracle(component)[1](component)


def ktype_multiplicities(component: SpectrumComponent, dmax: int, param=None) -> Multiplicities:
    """ K-types of total degree <= ``dmax`` with their multiplicities.

    Parameters
    ----------
    component: (SpectrumComponent) a component built by one of the branch_to_* constructors
    dmax: (int) degree bound
    param: the parameter value (or index value for indexed families); None sums over
        all discrete parameters that can contribute below ``dmax``

    Returns
    -------
    (Dict[Weight, int]) highest weights of ``ktype_group(component)`` and multiplicities
    """

    if dmax < 0:
        raise DomainError(message='dmax must be non-negative', dmax=dmax)
    oracle, _ = _oracle(component)
    return oracle(component, dmax, param)


def ktype_support(component: SpectrumComponent, dmax: int, param=None) -> Set[Weight]:
    return set(ktype_multiplicities(component, dmax, param))
