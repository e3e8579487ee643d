###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import logging
from typing import Dict, Optional

from ..oops import NoKTypeOracleError
from ..utils.constants import SubgroupKind
from ..lattice import Weight
from ..characters import (TorusEmbedding, branch_irreducible, orthogonal_in_unitary, symplectic_in_unitary,
                          unitary_block)
from ..harmonics import harmonic_weight, line_bundle_labels
from ..spectrum import Spectrum, gl2r_discrete_params
from ..branching import (REGIME_BOUNDARY, BranchRequest, big_display, branch, ktype_multiplicities,
                         ktype_support, sp_split_family)
from ..common import Report
from .verifiers import KLEIN_GROUP, first_mismatch, o2_fixed_dimension

__all__ = ['compact_embedding', 'restricted_line_bundle', 'verify_support']


def compact_embedding(req: BranchRequest) -> Optional[TorusEmbedding]:
    """ Maximal compact of the subgroup inside U(n), None for H6.
    """

    if req.subgroup in (SubgroupKind.H1, SubgroupKind.H2):
        return unitary_block(req.p, req.q)
    if req.subgroup in (SubgroupKind.H3, SubgroupKind.H4):
        return symplectic_in_unitary(req.m)
    if req.subgroup is SubgroupKind.H5:
        return orthogonal_in_unitary(req.n)
    return None


def restricted_line_bundle(n: int, k: int, emb: TorusEmbedding, degree: int, dmax: int) -> Dict[Weight, int]:
    """ Theorem K types H^{a,b}(C^n), a - b = -k, a + b <= ``degree``, restricted through
    ``emb``; types of degree above ``dmax`` dropped.
    """

    found: Dict[Weight, int] = {}
    for label in line_bundle_labels(n, k, degree):
        for weight, multiplicity in branch_irreducible(emb, harmonic_weight(label)[1]):
            if weight.degree <= dmax:
                found[weight] = found.get(weight, 0) + multiplicity
    return found


def _union(spectrum: Spectrum, dmax: int, components=None) -> Dict[Weight, int]:
    found: Dict[Weight, int] = {}
    for component in spectrum.components if components is None else components:
        for weight, multiplicity in ktype_multiplicities(component, dmax).items():
            found[weight] = found.get(weight, 0) + multiplicity
    return found


def _set_mismatch(found, expected) -> Optional[Dict]:
    return first_mismatch({w: 1 for w in found}, {w: 1 for w in expected})


def _check_h2(req: BranchRequest, spectrum: Spectrum, lhs: set, dmax: int, claim: str, params: Dict) -> Report:
    bound = dmax + req.p + req.q + abs(req.k) + 1
    for component in spectrum.discrete():
        for weight in sorted(ktype_support(component, dmax), reverse=True):
            if weight not in lhs:
                return Report.failed(claim, params, {'component': str(component.series), 'weight': list(weight),
                                                     'reason': 'discrete K-type missing from the restriction'})
    if req.p > 1 and req.q > 1:
        values = {t for component in spectrum.discrete() for t in component.params.elements(bound)}
        for t in sorted(values):
            plus = big_display(req.p, req.q, req.k, t, 1, dmax)
            minus = big_display(req.p, req.q, req.k, t, -1, dmax)
            common = set(plus) & set(minus)
            if common:
                return Report.failed(claim, params, {'t': str(t), 'weight': list(max(common)),
                                                     'reason': 'subquotients share a K-type'})
    for component in spectrum.continuous():
        witness = _set_mismatch(ktype_support(component, dmax), lhs)
        if witness:
            return Report.failed(claim, params, dict(witness, component=str(component.series)))
    boundary = [str(c.params) for c in spectrum.discrete() if REGIME_BOUNDARY in c.annotations]
    return Report.passed(claim, params, {'regime_boundary': boundary} if boundary else None)


def _check_h3(req: BranchRequest, spectrum: Spectrum, lhs: Dict[Weight, int], dmax: int, claim: str,
              params: Dict) -> Report:
    if len(spectrum) == 2:
        overlap = set(sp_split_family(req.m, 0, dmax)) & set(sp_split_family(req.m, 2, dmax))
        if overlap:
            return Report.failed(claim, params, {'weight': list(max(overlap)), 'reason': 'split families overlap'})
    witness = first_mismatch(lhs, _union(spectrum, dmax))
    if witness:
        return Report.failed(claim, params, witness)
    return Report.passed(claim, params)


def _check_h6(req: BranchRequest, spectrum: Spectrum, dmax: int, claim: str, params: Dict) -> Report:
    """ Parameter arithmetic, the O(2)-type threshold of the discrete data and the
    parity of the continuous family; irreducibility is not checkable here.
    """

    expected_params = gl2r_discrete_params(req.k)
    eps = req.k % 2
    for component in spectrum.discrete():
        if component.params != expected_params:
            return Report.failed(claim, params, {'params': str(component.params), 'expected': str(expected_params)})
        for t in component.params.elements(abs(req.k)):
            if t <= 0 or (abs(req.k) - 1 - t) % 2:
                return Report.failed(claim, params, {'t': str(t), 'reason': 'parameter outside |k|-1-2N0'})
            support = ktype_support(component, dmax, t)
            expected = {Weight((j,)) for j in range(dmax + 1) if j > t and (j - req.k) % 2 == 0}
            witness = _set_mismatch(support, expected)
            if witness:
                return Report.failed(claim, params, dict(witness, t=str(t)))

    def character(element):
        return int(element[0, 0]) ** eps

    for component in spectrum.continuous():
        expected = {Weight((j,)) for j in range(dmax + 1) if o2_fixed_dimension(KLEIN_GROUP, j, character) == 1}
        witness = _set_mismatch(ktype_support(component, dmax), expected)
        if witness:
            return Report.failed(claim, params, dict(witness, reason='continuous parity'))
    unverified = sorted(a for c in spectrum for a in c.annotations)
    return Report.passed(claim, params, {'unverified': unverified} if unverified else None)


def verify_support(theorem, params: Dict, dmax: int) -> Report:
    """ K-type consistency of a branching law at degree <= ``dmax``.

    The left side is the restriction of the Theorem K types of U(n) through
    the compact picture of the subgroup, truncated at U-degree dmax + |k| + 2.
    H1 and H5 are compared as sets, H3 and H4 with multiplicities; for H2 the
    discrete K-types must lie in the left side, the two subquotients at one t
    must be disjoint and the continuum must match as a set; H6 is checked
    structurally.

    Parameters
    ----------
    theorem: (SubgroupKind) one of H1, ..., H6
    params: (Dict) n, k and the p/q/m of the subgroup (optionally lambda)
    dmax: (int) degree bound

    Returns
    -------
    (Report) claim ``support:<theorem>``
    """

    subgroup = SubgroupKind(str(theorem))
    claim = f'support:{subgroup}'
    cell = dict(params, max_degree=dmax)
    req = BranchRequest(n=params['n'], subgroup=subgroup, k=params.get('k', 0), lam=params.get('lambda', 0),
                        p=params.get('p'), q=params.get('q'), m=params.get('m')).validate()
    spectrum = branch(req)
    try:
        if subgroup is SubgroupKind.H6:
            return _check_h6(req, spectrum, dmax, claim, cell)

        emb = compact_embedding(req)
        lhs = restricted_line_bundle(req.n, req.k, emb, dmax + abs(req.k) + 2, dmax)
        logging.info(f'{claim} {req.describe()}: {len(lhs)} left-side types up to degree {dmax}')
        if subgroup is SubgroupKind.H2:
            return _check_h2(req, spectrum, set(lhs), dmax, claim, cell)
        if subgroup in (SubgroupKind.H3, SubgroupKind.H4):
            return _check_h3(req, spectrum, lhs, dmax, claim, cell)
        witness = _set_mismatch(set(_union(spectrum, dmax)), set(lhs))
        if witness:
            return Report.failed(claim, cell, witness)
        return Report.passed(claim, cell)
    except NoKTypeOracleError as error:
        return Report.skipped(claim, cell, str(error))
