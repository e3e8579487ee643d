###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import json
from fractions import Fraction

import pytest

from branchkit.branching import *
from branchkit.lattice import make_group, orthogonal, symplectic, unitary
from branchkit.oops import DomainError, NoKTypeOracleError, RoutedError
from branchkit.spectrum import ParamSet, SeriesTag, Spectrum, SpectrumComponent
from branchkit.utils.constants import Measure, SeriesKind


def _series(component, key):
    return component.series.get(key)


def test_request_validation():
    with pytest.raises(DomainError):
        BranchRequest(n=3, subgroup='H3').validate()
    with pytest.raises(DomainError):
        BranchRequest(n=4, subgroup='H1', p=1, q=2).validate()
    with pytest.raises(DomainError):
        BranchRequest(n=4, subgroup='H2', p=4, q=0).validate()
    with pytest.raises(DomainError):
        BranchRequest(n=4, subgroup='H9')
    with pytest.raises(DomainError):
        BranchRequest(n=1, subgroup='K').validate()
    with pytest.raises(RoutedError) as info:
        BranchRequest(n=2, subgroup='H6').validate()
    assert info.value.route == 'H2(1,1)'


def test_request_describe_and_dict_form():
    req = BranchRequest(n=4, subgroup='H2', p=2, q=2, k=-1, lam='1/2')
    assert req.lam == Fraction(1, 2)
    assert req.describe() == 'H2(n=4,p=2,q=2,k=-1,lambda=1/2)'
    assert BranchRequest.from_dict(req.to_dict()) == req
    assert BranchRequest(n=6, subgroup='H4').m == 3


def test_theorem_k():
    spectrum = branch(BranchRequest(n=3, subgroup='K', k=-2))
    component, = spectrum.components
    assert component.params.first(3) == [2, 4, 6]
    assert ktype_group(component) == unitary(3)
    assert ktype_support(component, 4) == {(2, 0, 0), (3, 0, -1)}
    assert [c.params.values for c in spectrum.truncate(4)] == [(2,), (4,)]
    for weight in ktype_support(component, 8):
        assert sum(weight) == 2


def test_h1_tensor_products():
    spectrum = branch(BranchRequest(n=2, subgroup='H1', p=1, q=1, k=3))
    component, = spectrum.components
    assert component.measure is Measure.LEBESGUE
    assert component.index.params.is_two_sided
    assert len(spectrum.truncate(2)) == 5
    assert ktype_group(component) == make_group([unitary(1), unitary(1)])
    assert ktype_support(component, 3, param=1) == {(-1, -2)}
    assert ktype_support(component, 2, param=1) == set()


def test_h2_big_subquotients():
    spectrum = branch(BranchRequest(n=4, subgroup='H2', p=2, q=2, k=0))
    plus, minus = sorted(spectrum.discrete(), key=lambda c: _series(c, 'sign'))
    assert _series(plus, 'sign') == '+' and _series(minus, 'sign') == '-'
    assert plus.params.first(2) == [-1, -3]
    assert minus.params == plus.params
    continuum, = spectrum.continuous()
    assert continuum.multiplicity == 2

    upper = ktype_support(plus, 2, param=-1)
    lower = ktype_support(minus, 2, param=-1)
    assert (1, -1, 0, 0) in upper
    assert (0, 0, 1, -1) in lower
    assert not upper & lower
    with pytest.raises(DomainError):
        ktype_support(plus, 2, param=-2)


def test_h2_rank_one_split():
    spectrum = branch(BranchRequest(n=4, subgroup='H2', p=3, q=1, k=0))
    discrete = spectrum.discrete()
    assert all(_series(c, 'sign') == '+' for c in discrete)
    complementary = [c for c in discrete if _series(c, 'form') == 'complementary']
    assert [c.params for c in complementary] == [ParamSet.finite([-1])]
    boundary = [c for c in discrete if REGIME_BOUNDARY in c.annotations]
    assert len(boundary) == 1
    assert boundary[0].params.first(2) == [-3, -5]


def test_h2_small_subquotients():
    spectrum = branch(BranchRequest(n=4, subgroup='H2', p=3, q=1, k=6))
    small, = [c for c in spectrum.discrete() if _series(c, 'display') == 'small']
    assert small.params == ParamSet.finite([-1])
    support = ktype_support(small, 6, param=-1)
    assert (0, 0, 0, -6) in support
    assert (0, 0, -1, -5) in support
    assert all(sum(weight) == -6 for weight in support)

    assert not [c for c in branch(BranchRequest(n=4, subgroup='H2', p=3, q=1, k=5)).discrete()
                if _series(c, 'display') == 'small']


def test_small_display_is_empty_without_a_bundle():
    assert small_display(3, 0, Fraction(-1), 6) == {}


def test_h3_splits_only_at_the_origin():
    assert len(branch(BranchRequest(n=4, subgroup='H3', k=0, lam=1))) == 1
    assert len(branch(BranchRequest(n=4, subgroup='H3', k=3, lam=0))) == 1
    spectrum = branch(BranchRequest(n=4, subgroup='H3', k=0, lam=0))
    assert len(spectrum) == 2
    minus, = [c for c in spectrum if _series(c, 'sign') == '-']
    assert ktype_group(minus) == symplectic(2)
    assert ktype_support(minus, 2) == {(2, 0)}


def test_sp_split_families_are_disjoint():
    plus, minus = sp_split_family(2, 0, 6), sp_split_family(2, 2, 6)
    assert not set(plus) & set(minus)
    assert (0, 0) in plus and (1, 1) in plus
    assert (2, 0) in minus


def test_h4():
    component, = branch(BranchRequest(n=2, subgroup='H4', k=-2)).components
    assert [c.params.values for c in branch(BranchRequest(n=2, subgroup='H4', k=-2)).truncate(6)] == \
        [(2,), (4,), (6,)]
    assert ktype_support(component, 4) == {(2,), (4,)}
    odd, = branch(BranchRequest(n=4, subgroup='H4', k=1)).components
    assert odd.params.first(3) == [1, 3, 5]


def test_h5():
    spectrum = branch(BranchRequest(n=3, subgroup='H5', k=0))
    component, = spectrum.components
    assert not spectrum.discrete()
    assert component.multiplicity == 1
    assert component.index.params.first(3) == [0, 2, 4]
    assert ktype_group(component) == orthogonal(3)
    assert ktype_support(component, 2, param=2) == {(2,)}
    assert ktype_support(component, 2, param=0) == {(0,), (1,), (2,)}
    with pytest.raises(DomainError):
        ktype_support(component, 2, param=1)
    odd, = branch(BranchRequest(n=3, subgroup='H5', k=1)).components
    assert odd.index.params.first(2) == [1, 3]


def test_h6():
    spectrum = branch(BranchRequest(n=3, subgroup='H6', k=4))
    discrete, = spectrum.discrete()
    continuum, = spectrum.continuous()
    assert discrete.params.values == (1, 3)
    assert continuum.multiplicity == 2
    assert GENERIC_IRREDUCIBILITY in continuum.annotations
    assert ktype_support(discrete, 5, param=1) == {(2,), (4,)}
    assert ktype_support(continuum, 4) == {(0,), (2,), (4,)}
    assert not branch(BranchRequest(n=3, subgroup='H6', k=1)).discrete()


def test_constructors_produce_merged_spectra():
    requests = [
        BranchRequest(n=3, subgroup='K', k=1),
        BranchRequest(n=3, subgroup='H1', p=1, q=2, k=1),
        BranchRequest(n=4, subgroup='H2', p=2, q=2, k=2),
        BranchRequest(n=3, subgroup='H2', p=1, q=2, k=-5),
        BranchRequest(n=4, subgroup='H3', k=0),
        BranchRequest(n=4, subgroup='H4', k=2),
        BranchRequest(n=4, subgroup='H5', k=0),
        BranchRequest(n=3, subgroup='H6', k=-3),
    ]
    for req in requests:
        spectrum = branch(req)
        assert len(spectrum.merge()) == len(spectrum)
        assert spectrum.provenance == req.describe()


def test_missing_oracle():
    component = SpectrumComponent('SL(2,R)', SeriesTag.of(SeriesKind.SUBQUOTIENT), ParamSet.finite([1]))
    with pytest.raises(NoKTypeOracleError):
        ktype_support(component, 2)
    with pytest.raises(DomainError):
        ktype_support(branch(BranchRequest(n=2, subgroup='K')).components[0], -1)


@pytest.mark.parametrize('m', [1, 2, 3])
def test_sp_split_families_cover_the_even_types(m):
    dmax = 8
    plus, minus = sp_split_family(m, 0, dmax), sp_split_family(m, 2, dmax)
    expected = {(a, b) + (0,) * (m - 2) if m > 1 else (a,)
                for a in range(dmax + 1) for b in range(a + 1)
                if a + b <= dmax and (a - b) % 2 == 0 and (m > 1 or b == 0)}
    assert set(plus) | set(minus) == expected
    assert not set(plus) & set(minus)
    assert set(plus.values()) == {1} and set(minus.values()) == {1}


@pytest.mark.parametrize('req, param', [
    (BranchRequest(n=3, subgroup='K', k=-2), None),
    (BranchRequest(n=4, subgroup='H3', k=0, lam=0), None),
    (BranchRequest(n=4, subgroup='H4', k=1), None),
    (BranchRequest(n=3, subgroup='H5', k=0), 0),
])
def test_ktype_support_grows_with_the_degree(req, param):
    for component in branch(req).components:
        previous = set()
        for dmax in range(5):
            current = ktype_support(component, dmax, param=param)
            assert previous <= current
            previous = current
        assert previous


@pytest.mark.parametrize('req', [
    BranchRequest(n=3, subgroup='K', k=1),
    BranchRequest(n=3, subgroup='H1', p=1, q=2, k=1),
    BranchRequest(n=4, subgroup='H2', p=3, q=1, k=0),
    BranchRequest(n=4, subgroup='H3', k=0, lam='-1/2'),
    BranchRequest(n=4, subgroup='H4', k=2),
    BranchRequest(n=4, subgroup='H5', k=0),
    BranchRequest(n=3, subgroup='H6', k=4),
])
def test_spectra_survive_json(req):
    spectrum = branch(req)
    assert Spectrum.from_dict(json.loads(json.dumps(spectrum.to_dict()))) == spectrum
