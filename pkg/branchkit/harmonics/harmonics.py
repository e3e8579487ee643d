###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, List, Tuple

from sympy import binomial

from ..oops import BranchkitError, DomainError, ResourceLimitError
from ..utils.constants import HarmonicKind, get_degree_cap
from ..lattice import Group, Weight, orthogonal, su2, symplectic, unitary, weyl_dim
from ..characters import IrrepDecomposition, LaurentChar, irreducible_character, torus_variables
from .labels import HarmonicLabel

__all__ = ['harmonic_weight', 'harmonic_dim', 'harmonic_character', 'real_harmonic_dim_closed_form',
           'l2_sphere', 'line_bundle_labels', 'l2_line_bundle_sphere']


def harmonic_weight(label: HarmonicLabel) -> Tuple[Group, Weight]:
    """ Group and highest weight of a harmonic label.

    Parameters
    ----------
    label: (HarmonicLabel) the label

    Returns
    -------
    (Tuple[Group, Weight]) O(N) with (j, 0, ...), U(n) with (a, 0, ..., 0, -b),
    Sp(m) with (a, b, 0, ...) or SU2 with (j)
    """

    if label.is_zero:
        raise DomainError(message='H^{a,b}(C) is zero when a*b != 0', label=str(label))
    if label.kind is HarmonicKind.REAL:
        group = orthogonal(label.n)
        return group, Weight((label.alpha,) + (0,) * (group.rank - 1))
    if label.kind is HarmonicKind.COMPLEX:
        if label.n == 1:
            return unitary(1), Weight((label.alpha - label.beta,))
        return unitary(label.n), Weight((label.alpha,) + (0,) * (label.n - 2) + (-label.beta,))
    if label.kind is HarmonicKind.QUATERNIONIC:
        coords = (label.alpha, label.beta)[:label.n] + (0,) * max(label.n - 2, 0)
        return symplectic(label.n), Weight(coords)
    return su2(), Weight((label.alpha,))


def real_harmonic_dim_closed_form(N: int, j: int) -> int:
    """ dim H^j(R^N) = C(N+j-1, j) - C(N+j-3, j-2).
    """

    value = binomial(N + j - 1, j)
    if j >= 2:
        value -= binomial(N + j - 3, j - 2)
    return int(value)


def harmonic_dim(label: HarmonicLabel) -> int:
    """ Dimension of a harmonic label through the Weyl dimension formula.

    Parameters
    ----------
    label: (HarmonicLabel) the label

    Returns
    -------
    (int) the dimension
    """

    group, weight = harmonic_weight(label)
    dim = weyl_dim(group, weight)
    if label.kind is HarmonicKind.REAL and dim != real_harmonic_dim_closed_form(label.n, label.alpha):
        raise BranchkitError(message='Weyl and binomial dimensions of H^j(R^N) disagree', label=str(label))
    return dim


def _eigenvalue_exponents(N: int) -> List[Tuple[int, ...]]:
    rank = N // 2
    exponents = []
    for i in range(rank):
        unit = [0] * rank
        unit[i] = 1
        exponents.append(tuple(unit))
        unit[i] = -1
        exponents.append(tuple(unit))
    if N % 2:
        exponents.append((0,) * rank)
    return exponents


@lru_cache(maxsize=256)
def _complete_homogeneous(N: int, j: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    eigenvalues = _eigenvalue_exponents(N)
    rank = N // 2
    terms: Dict[Tuple[int, ...], int] = {}
    for choice in combinations_with_replacement(range(len(eigenvalues)), j):
        exponent = [0] * rank
        for index in choice:
            for i, e in enumerate(eigenvalues[index]):
                exponent[i] += e
        exponent = tuple(exponent)
        terms[exponent] = terms.get(exponent, 0) + 1
    return tuple(terms.items())


def harmonic_character(label: HarmonicLabel) -> LaurentChar:
    """ Character of a harmonic label on the torus of its group.

    H^j(R^N) is computed as h_j - h_{j-2} of the eigenvalues
    (z_1, z_1^-1, ..., [1]); the other kinds use the Weyl character formula.

    Parameters
    ----------
    label: (HarmonicLabel) the label

    Returns
    -------
    (LaurentChar) the character
    """

    group, weight = harmonic_weight(label)
    if label.kind is not HarmonicKind.REAL:
        return irreducible_character(group, weight)

    cap = get_degree_cap()
    if label.alpha > cap:
        raise ResourceLimitError(message='degree budget exceeded', label=str(label), cap=cap)
    variables = torus_variables(group)
    character = LaurentChar(variables, dict(_complete_homogeneous(label.n, label.alpha)))
    if label.alpha >= 2:
        character = character - LaurentChar(variables, dict(_complete_homogeneous(label.n, label.alpha - 2)))
    return character


def l2_sphere(N: int, dmax: int) -> IrrepDecomposition:
    """ L^2(S^{N-1}) up to degree ``dmax``: every H^j(R^N) once.
    """

    if N < 2:
        raise DomainError(message='L^2(S^{N-1}) needs N >= 2', N=N)
    group = orthogonal(N)
    entries = tuple((harmonic_weight(HarmonicLabel.real(N, j))[1], 1) for j in range(max(dmax, -1) + 1))
    return IrrepDecomposition(group, entries)


def line_bundle_labels(n: int, k: int, dmax: int) -> List[HarmonicLabel]:
    """ The labels H^{a,b}(C^n) with a - b = -k and a + b <= dmax, by increasing degree.
    """

    labels = []
    for degree in range(abs(k), dmax + 1, 2):
        alpha, beta = (degree - k) // 2, (degree + k) // 2
        label = HarmonicLabel.complex(n, alpha, beta)
        if not label.is_zero:
            labels.append(label)
    return labels


def l2_line_bundle_sphere(n: int, k: int, dmax: int) -> IrrepDecomposition:
    """ Sections of the line bundle of degree ``k`` over S^{2n-1}, restricted to U(n).

    Parameters
    ----------
    n: (int) complex dimension, n >= 1 (n = 1 gives the single U(1)-type of GL(1,C))
    k: (int) the bundle degree
    dmax: (int) bound on a + b

    Returns
    -------
    (IrrepDecomposition) {H^{a,b}(C^n): a - b = -k, a + b <= dmax}, each once
    """

    if n < 1:
        raise DomainError(message='line bundle over S^{2n-1} needs n >= 1', n=n)
    entries = tuple((harmonic_weight(label)[1], 1) for label in line_bundle_labels(n, k, dmax))
    return IrrepDecomposition(unitary(n), entries)
