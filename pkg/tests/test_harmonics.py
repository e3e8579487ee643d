###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import pytest

from branchkit.harmonics import *
from branchkit.lattice import orthogonal, symplectic, unitary
from branchkit.oops import DomainError


def test_harmonic_dimensions():
    assert harmonic_dim(HarmonicLabel.real(8, 2)) == 35
    assert harmonic_dim(HarmonicLabel.real(2, 3)) == 2
    assert harmonic_dim(HarmonicLabel.real(3, 2)) == 5
    assert harmonic_dim(HarmonicLabel.complex(3, 1, 1)) == 8
    assert harmonic_dim(HarmonicLabel.complex(2, 1, 1)) == 3
    assert harmonic_dim(HarmonicLabel.quaternionic(2, 1, 1)) == 5
    assert harmonic_dim(HarmonicLabel.quaternionic(1, 3, 0)) == 4
    assert harmonic_dim(HarmonicLabel.su2(5)) == 6


def test_real_dimension_closed_form():
    assert real_harmonic_dim_closed_form(8, 2) == 35
    assert real_harmonic_dim_closed_form(4, 1) == 4
    assert real_harmonic_dim_closed_form(2, 0) == 1
    for N in range(2, 7):
        for j in range(6):
            assert harmonic_dim(HarmonicLabel.real(N, j)) == real_harmonic_dim_closed_form(N, j)


def test_harmonic_weights():
    assert harmonic_weight(HarmonicLabel.real(5, 3)) == (orthogonal(5), (3, 0))
    assert harmonic_weight(HarmonicLabel.complex(3, 2, 1)) == (unitary(3), (2, 0, -1))
    assert harmonic_weight(HarmonicLabel.complex(1, 0, 2)) == (unitary(1), (-2,))
    assert harmonic_weight(HarmonicLabel.quaternionic(3, 2, 1)) == (symplectic(3), (2, 1, 0))
    with pytest.raises(DomainError):
        harmonic_weight(HarmonicLabel.complex(1, 1, 1))


def test_parse_harmonic():
    assert parse_harmonic('R:8:2') == HarmonicLabel.real(8, 2)
    assert parse_harmonic('C:3:1:1') == HarmonicLabel.complex(3, 1, 1)
    assert parse_harmonic('SU2:5') == HarmonicLabel.su2(5)
    assert str(parse_harmonic('H:2:1:1')) == 'H^{1,1}(H^2)'
    for bad in ('X:1', 'R:8', 'C:2:a:1', 'R:1:0', 'H:2:0:1'):
        with pytest.raises(DomainError):
            parse_harmonic(bad)


def test_harmonic_characters():
    assert harmonic_character(HarmonicLabel.real(4, 1)).dimension() == 4
    assert harmonic_character(HarmonicLabel.real(5, 2)).dimension() == 14
    chi = harmonic_character(HarmonicLabel.complex(2, 1, 1))
    assert chi.dimension() == 3
    assert chi.coefficient((0, 0)) == 1


def test_l2_sphere():
    assert l2_sphere(3, 2).as_dict() == {(0,): 1, (1,): 1, (2,): 1}


def test_line_bundle_sections():
    assert l2_line_bundle_sphere(3, -2, 4).as_dict() == {(2, 0, 0): 1, (3, 0, -1): 1}
    assert l2_line_bundle_sphere(2, 0, 2).as_dict() == {(0, 0): 1, (1, -1): 1}
    assert l2_line_bundle_sphere(1, 2, 6).as_dict() == {(-2,): 1}
    assert [label.degree for label in line_bundle_labels(3, 1, 5)] == [1, 3, 5]
