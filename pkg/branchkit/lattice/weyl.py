###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import List, Sequence, Tuple

from ..oops import DomainError, ResourceLimitError
from ..utils import constants
from ..utils.constants import GroupFamily
from .groups import Group, GroupLabel
from .weights import is_dominant

__all__ = ['WeylElement', 'weyl_group', 'positive_roots', 'rho', 'weyl_dim']


@dataclass(frozen=True)
class WeylElement(object):
    """ A signed permutation acting on torus coordinates by
    ``(w.v)_i = signs[i] * v[perm[i]]``.
    """

    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    def apply(self, vector: Sequence) -> tuple:
        return tuple(s * vector[p] for p, s in zip(self.perm, self.signs))

    @property
    def det(self) -> int:
        inversions = sum(1 for i in range(len(self.perm)) for j in range(i + 1, len(self.perm))
                         if self.perm[i] > self.perm[j])
        sign = -1 if inversions % 2 else 1
        for s in self.signs:
            sign *= s
        return sign


def _check_rank(group: Group):
    if group.rank > constants.RANK_CAP:
        raise ResourceLimitError(message='rank above the configured cap', group=str(group),
                                 rank=group.rank, cap=constants.RANK_CAP)


def _weyl_single(group: GroupLabel) -> List[WeylElement]:
    rank = group.rank
    perms = list(permutations(range(rank)))
    if group.family is GroupFamily.U:
        return [WeylElement(p, (1,) * rank) for p in perms]
    sign_choices = list(product((1, -1), repeat=rank))
    if group.family is GroupFamily.SO and group.n % 2 == 0:
        sign_choices = [s for s in sign_choices if s.count(-1) % 2 == 0]
    return [WeylElement(p, s) for p in perms for s in sign_choices]


def weyl_group(group: Group) -> List[WeylElement]:
    """ Enumerate the Weyl group as signed permutations.

    U(n) gives permutations, SO(2r) signed permutations with an even number of
    sign changes, Sp(m), SO(2r+1), O(n) and SU2 all signed permutations. For a
    product the factor groups act block-wise.

    Parameters
    ----------
    group: (Group) the compact group

    Returns
    -------
    (List[WeylElement]) every element, identity first
    """

    _check_rank(group)
    elements = [WeylElement((), ())]
    offset = 0
    for factor in group.factors:
        factor_elements = _weyl_single(factor)
        combined = []
        for head in elements:
            for tail in factor_elements:
                combined.append(WeylElement(head.perm + tuple(p + offset for p in tail.perm),
                                            head.signs + tail.signs))
        elements = combined
        offset += factor.rank
    return elements


def _roots_single(group: GroupLabel) -> List[Tuple[int, ...]]:
    rank = group.rank
    family = group.family

    def unit(i, c=1):
        v = [0] * rank
        v[i] = c
        return v

    if family is GroupFamily.SU2:
        return [(2,)]
    roots = []
    for i in range(rank):
        for j in range(i + 1, rank):
            minus = unit(i)
            minus[j] = -1
            roots.append(tuple(minus))
            if family is not GroupFamily.U:
                plus = unit(i)
                plus[j] = 1
                roots.append(tuple(plus))
    if family is GroupFamily.SP:
        roots.extend(tuple(unit(i, 2)) for i in range(rank))
    elif family in (GroupFamily.SO, GroupFamily.O) and group.n % 2 == 1:
        roots.extend(tuple(unit(i)) for i in range(rank))
    return roots


def positive_roots(group: Group) -> List[Tuple[int, ...]]:
    """ Positive roots in torus coordinates; each has a positive first non-zero entry.
    """

    roots, offset, total = [], 0, group.rank
    for factor in group.factors:
        for root in _roots_single(factor):
            padded = [0] * total
            padded[offset:offset + factor.rank] = root
            roots.append(tuple(padded))
        offset += factor.rank
    return roots


def rho(group: Group) -> Tuple[Fraction, ...]:
    """ Half the sum of the positive roots.
    """

    total = [Fraction(0)] * group.rank
    for root in positive_roots(group):
        for i, c in enumerate(root):
            total[i] += Fraction(c, 2)
    return tuple(total)


def _dim_single(group: GroupLabel, hw: Sequence[int]) -> Fraction:
    shift = rho(group)
    value = Fraction(1)
    for root in _roots_single(group):
        numerator = sum((h + r) * a for h, r, a in zip(hw, shift, root))
        denominator = sum(r * a for r, a in zip(shift, root))
        value *= Fraction(numerator) / denominator
    if group.family is GroupFamily.O and group.n % 2 == 0 and hw[-1] != 0:
        value *= 2
    return value


def weyl_dim(group: Group, hw: Sequence[int]) -> int:
    """ Weyl dimension formula evaluated exactly.

    Parameters
    ----------
    group: (Group) the compact group
    hw: (Sequence[int]) a dominant highest weight

    Returns
    -------
    (int) the dimension of the irreducible representation
    """

    hw = tuple(hw)
    if not is_dominant(group, hw):
        raise DomainError(message='highest weight is not dominant', group=str(group), weight=hw)
    value = Fraction(1)
    for factor, piece in zip(group.factors, group.split(hw)):
        value *= _dim_single(factor, piece)
    if value.denominator != 1:
        raise DomainError(message='Weyl dimension is not integral', group=str(group), weight=hw, value=str(value))
    return int(value)
