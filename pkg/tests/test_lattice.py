###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import pytest

from branchkit.lattice import *
from branchkit.oops import DomainError, ResourceLimitError
from branchkit.utils import constants


def test_weyl_dimensions():
    assert weyl_dim(symplectic(2), (1, 1)) == 5
    assert weyl_dim(symplectic(2), (1, 0)) == 4
    assert weyl_dim(unitary(3), (1, 0, -1)) == 8
    assert weyl_dim(special_orthogonal(5), (1, 0)) == 5
    assert weyl_dim(su2(), (5,)) == 6


def test_orthogonal_doubles_types_with_nonzero_last_coordinate():
    assert weyl_dim(special_orthogonal(4), (1, 1)) == 3
    assert weyl_dim(orthogonal(4), (1, 1)) == 6
    assert weyl_dim(orthogonal(4), (1, 0)) == 4
    assert weyl_dim(orthogonal(2), (3,)) == 2
    assert weyl_dim(orthogonal(2), (0,)) == 1


def test_dominance():
    assert is_dominant(unitary(3), (2, 0, -1))
    assert not is_dominant(unitary(3), (0, 1, 0))
    assert is_dominant(special_orthogonal(4), (1, -1))
    assert not is_dominant(orthogonal(4), (1, -1))
    assert not is_dominant(symplectic(2), (1, -1))
    with pytest.raises(DomainError):
        is_dominant(unitary(2), (1, 0, 0))


def test_dominant_weights_are_ordered_by_degree():
    assert dominant_weights(symplectic(2), 2) == [(0, 0), (1, 0), (2, 0), (1, 1)]
    assert dominant_weights(orthogonal(3), 2) == [(0,), (1,), (2,)]
    assert dominant_weights(unitary(2), -1) == []


def test_weight_degree_and_concatenation():
    weight = concat_weights((1, -1), (0, -2))
    assert weight == (1, -1, 0, -2)
    assert weight.degree == 4
    with pytest.raises(DomainError):
        Weight((1.5,))


def test_weyl_group_orders():
    assert len(weyl_group(unitary(3))) == 6
    assert len(weyl_group(symplectic(2))) == 8
    assert len(weyl_group(special_orthogonal(4))) == 4
    assert len(weyl_group(make_group([unitary(2), unitary(1)]))) == 2
    assert len(weyl_group(special_orthogonal(2))) == 1


def test_rho_and_roots():
    assert rho(unitary(3)) == (1, 0, -1)
    assert rho(symplectic(2)) == (2, 1)
    assert len(positive_roots(symplectic(2))) == 4
    assert positive_roots(orthogonal(2)) == []


def test_rank_cap(monkeypatch):
    monkeypatch.setattr(constants, 'RANK_CAP', 2)
    with pytest.raises(ResourceLimitError):
        weyl_group(unitary(3))


def test_groups_and_products():
    group = parse_group('U(2)xSp(1)')
    assert group.rank == 3
    assert str(group) == 'U(2)xSp(1)'
    assert group.split((1, 0, 2)) == ((1, 0), (2,))
    assert parse_group('SU2') == su2()
    assert make_group([unitary(3)]) == unitary(3)
    assert orthogonal(5).rank == 2
    with pytest.raises(DomainError):
        unitary(0)
    with pytest.raises(DomainError):
        orthogonal(1)


@pytest.mark.parametrize('group', [unitary(1), unitary(3), special_orthogonal(2), special_orthogonal(5),
                                   special_orthogonal(6), orthogonal(3), orthogonal(4), symplectic(3), su2()])
def test_trivial_weight_has_dimension_one(group):
    assert weyl_dim(group, (0,) * group.rank) == 1


@pytest.mark.parametrize('n', [2, 3, 4])
def test_unitary_dual_has_the_same_dimension(n):
    for hw in dominant_weights(unitary(n), 4):
        dual = tuple(-c for c in reversed(hw))
        assert is_dominant(unitary(n), dual)
        assert weyl_dim(unitary(n), dual) == weyl_dim(unitary(n), hw)
