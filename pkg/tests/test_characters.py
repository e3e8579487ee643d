###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import pytest

from branchkit.characters import *
from branchkit.lattice import (dominant_weights, make_group, orthogonal, special_orthogonal, symplectic, unitary,
                               weyl_dim)
from branchkit.oops import DomainError, NotACharacterError, ResourceLimitError
from branchkit.utils.constants import GroupFamily


def test_laurent_arithmetic():
    variables = ('z1', 'z2')
    a = LaurentChar(variables, {(1, 0): 1, (0, 1): 1})
    b = LaurentChar.monomial(variables, (0, 0), 2)
    assert (a + b).dimension() == 4
    assert (a - a).is_zero()
    assert (a * a).coefficient((1, 1)) == 2
    assert (3 * a).coefficient((0, 1)) == 3
    assert a.degree() == 1
    assert len(a) == 2
    with pytest.raises(DomainError):
        LaurentChar(variables, {(1,): 1})


def test_unitary_character():
    chi = irreducible_character(unitary(2), (1, 0))
    assert dict(chi.items()) == {(1, 0): 1, (0, 1): 1}
    adjoint = irreducible_character(unitary(3), (1, 0, -1))
    assert adjoint.dimension() == 8
    assert adjoint.coefficient((0, 0, 0)) == 2
    assert adjoint.is_weyl_symmetric(unitary(3))


def test_symplectic_tensor_square():
    chi = irreducible_character(symplectic(2), (1, 0))
    assert chi.dimension() == 4
    assert chi.is_weyl_symmetric(symplectic(2))
    square = decompose(chi * chi, symplectic(2))
    assert square.as_dict() == {(2, 0): 1, (1, 1): 1, (0, 0): 1}
    assert square.dimension() == 16


def test_orthogonal_character_collects_both_chambers():
    chi = irreducible_character(orthogonal(4), (1, 1))
    assert chi.dimension() == 6
    assert chi.coefficient((1, 1)) == 1
    assert chi.coefficient((1, -1)) == 1


def test_non_dominant_weight_is_rejected():
    with pytest.raises(DomainError):
        irreducible_character(unitary(2), (0, 1))


def test_decompose_rejects_negative_characters():
    chi = irreducible_character(unitary(2), (1, 0))
    with pytest.raises(NotACharacterError):
        decompose(-chi, unitary(2))


def test_degree_cap(monkeypatch):
    monkeypatch.setenv('BRANCHKIT_DEGREE_CAP', '2')
    with pytest.raises(ResourceLimitError):
        irreducible_character(unitary(2), (3, 0))
    monkeypatch.setenv('BRANCHKIT_DEGREE_CAP', 'many')
    with pytest.raises(DomainError):
        irreducible_character(unitary(2), (1, 0))


def test_restrict_standard_representations():
    chi = irreducible_character(unitary(4), (1, 0, 0, 0))
    emb = symplectic_in_unitary(2)
    assert decompose(restrict(chi, emb), symplectic(2)).as_dict() == {(1, 0): 1}

    chi = irreducible_character(unitary(3), (1, 0, 0))
    assert decompose(restrict(chi, orthogonal_in_unitary(3)), orthogonal(3)).as_dict() == {(1,): 1}


def test_restrict_adjoint_of_u3_to_so3():
    emb = orthogonal_in_unitary(3, GroupFamily.SO)
    decomposition = branch_irreducible(emb, (1, 0, -1))
    assert decomposition.as_dict() == {(2,): 1, (1,): 1}
    assert decomposition.dimension() == 8


def test_block_embedding_branches_tensor_products():
    decomposition = branch_irreducible(unitary_block(2, 1), (1, 0, 0))
    assert decomposition.as_dict() == {(1, 0, 0): 1, (0, 0, 1): 1}


def test_frobenius_multiplicity():
    emb = rotation_block(4, GroupFamily.SO)
    assert str(emb.sub) == 'SO(2)xSO(2)'
    assert frobenius_multiplicity(special_orthogonal(4), (1, 0), emb.sub, emb, (1, 0)) == 1
    assert frobenius_multiplicity(special_orthogonal(4), (1, 0), emb.sub, emb, (1, 1)) == 0

    emb = levi_diagonal(2, 2)
    assert str(emb.sub) == 'U(1)xU(1)xU(1)'
    ambient = make_group([unitary(2), unitary(2)])
    assert frobenius_multiplicity(ambient, (1, 0, 0, -1), emb.sub, emb, (0, 0, 0)) == 1
    with pytest.raises(DomainError):
        frobenius_multiplicity(unitary(4), (1, 0, 0, 0), emb.sub, emb, (0, 0, 0))


def test_compose_checks_the_chain():
    emb = symplectic_in_orthogonal(1)
    assert emb.ambient == orthogonal(4)
    assert emb.sub == symplectic(1)
    with pytest.raises(DomainError):
        compose(symplectic_in_unitary(2), symplectic_in_unitary(1))


def test_tensor_builds_product_characters():
    a = LaurentChar(('x1',), {(1,): 1, (-1,): 1})
    b = LaurentChar(('y1',), {(2,): 1})
    product = a.tensor(b)
    assert product.variables == ('x1', 'y1')
    assert dict(product.items()) == {(1, 2): 1, (-1, 2): 1}
    assert a.tensor(b, ('u', 'v')).variables == ('u', 'v')

    group = make_group([unitary(1), unitary(2)])
    chi = irreducible_character(group, (3, 1, 0))
    expected = irreducible_character(unitary(1), (3,)).tensor(irreducible_character(unitary(2), (1, 0)))
    assert dict(chi.items()) == dict(expected.items())
    assert chi.variables == torus_variables(group)


@pytest.mark.parametrize('group', [unitary(2), unitary(3), symplectic(2), special_orthogonal(4),
                                   special_orthogonal(5)])
def test_decompose_recovers_every_irreducible(group):
    weights = dominant_weights(group, 3)
    for hw in weights:
        assert decompose(irreducible_character(group, hw), group).as_dict() == {hw: 1}
    first, last = weights[1], weights[-1]
    pair = irreducible_character(group, first) + irreducible_character(group, last)
    assert decompose(pair, group).as_dict() == {first: 1, last: 1}


def test_decompose_ignores_term_order():
    group = unitary(3)
    chi = irreducible_character(group, (2, 0, -1)) + 2 * irreducible_character(group, (1, 0, 0))
    reordered = LaurentChar(chi.variables, dict(reversed(list(chi.items()))))
    assert decompose(reordered, group) == decompose(chi, group)
    assert decompose(chi, group).as_dict() == {(2, 0, -1): 1, (1, 0, 0): 2}


@pytest.mark.parametrize('emb', [
    symplectic_in_unitary(2),
    orthogonal_in_unitary(3, GroupFamily.SO),
    orthogonal_in_unitary(4),
    unitary_in_orthogonal(2),
    quaternionic_line(2),
    complex_line_in_symplectic(2),
    unitary_block(2, 1),
])
def test_restriction_is_weyl_symmetric(emb):
    for hw in dominant_weights(emb.ambient, 2):
        restricted = restrict(irreducible_character(emb.ambient, hw), emb)
        assert restricted.is_weyl_symmetric(emb.sub), (str(emb.sub), hw)
        assert restricted.dimension() == weyl_dim(emb.ambient, hw)


def test_character_caches_are_bounded():
    from branchkit.characters.frobenius import _branch_cached
    from branchkit.characters.weyl_character import _connected_character
    from branchkit.harmonics.harmonics import _complete_homogeneous

    for memo in (_branch_cached, _connected_character, _complete_homogeneous):
        assert memo.cache_info().maxsize is not None
    branch_irreducible(symplectic_in_unitary(1), (1, -1))
    assert _branch_cached.cache_info().currsize <= _branch_cached.cache_info().maxsize
