###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import re
from dataclasses import dataclass
from typing import Tuple, Union, Sequence

from ..oops import DomainError
from ..utils.constants import GroupFamily

__all__ = ['GroupLabel', 'ProductGroup', 'Group', 'unitary', 'special_orthogonal', 'orthogonal',
           'symplectic', 'su2', 'make_group', 'parse_group']

_SINGLE = re.compile(r'^(U|SO|O|Sp)\((\d+)\)$')


@dataclass(frozen=True)
class GroupLabel(object):
    """ A compact classical group: U(n), SO(n), O(n), Sp(m) or SU2.

    O(n) lives on the SO(n) torus; the family itself is the parity tag that
    doubles even-rank types with a non-zero last coordinate.
    """

    family: GroupFamily
    n: int

    def __post_init__(self):
        try:
            family = GroupFamily(str(self.family))
        except ValueError:
            raise DomainError(message='unknown group family', family=self.family)
        object.__setattr__(self, 'family', family)
        object.__setattr__(self, 'n', int(self.n))

        if family is GroupFamily.U and self.n < 1:
            raise DomainError(message='U(n) requires n >= 1', n=self.n)
        if family in (GroupFamily.SO, GroupFamily.O) and self.n < 2:
            raise DomainError(message=f'{family}(n) requires n >= 2', n=self.n)
        if family is GroupFamily.SP and self.n < 1:
            raise DomainError(message='Sp(m) requires m >= 1', m=self.n)
        if family is GroupFamily.SU2 and self.n != 2:
            raise DomainError(message='SU2 carries n = 2', n=self.n)

    @property
    def rank(self) -> int:
        if self.family in (GroupFamily.SO, GroupFamily.O):
            return self.n // 2
        if self.family is GroupFamily.SU2:
            return 1
        return self.n

    @property
    def factors(self) -> Tuple['GroupLabel', ...]:
        return (self,)

    @property
    def is_even_orthogonal(self) -> bool:
        return self.family in (GroupFamily.SO, GroupFamily.O) and self.n % 2 == 0

    def split(self, weight: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
        return (tuple(weight),)

    def __str__(self):
        if self.family is GroupFamily.SU2:
            return 'SU2'
        return f'{self.family}({self.n})'


@dataclass(frozen=True)
class ProductGroup(object):
    """ An ordered, flat, non-empty product of classical groups.
    """

    factors: Tuple[GroupLabel, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise DomainError(message='a product group needs at least one factor')
        for factor in factors:
            if not isinstance(factor, GroupLabel):
                raise DomainError(message='product factors must be single classical groups', factor=factor)
        object.__setattr__(self, 'factors', factors)

    @property
    def rank(self) -> int:
        return sum(factor.rank for factor in self.factors)

    def split(self, weight: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
        """ Cut a concatenated weight into its per-factor pieces.

        Parameters
        ----------
        weight: (Sequence[int]) a weight of the product

        Returns
        -------
        (Tuple[Tuple[int, ...], ...]) one piece per factor
        """

        weight = tuple(weight)
        if len(weight) != self.rank:
            raise DomainError(message='weight length does not match the product rank',
                              group=str(self), weight=weight)
        pieces, start = [], 0
        for factor in self.factors:
            pieces.append(weight[start:start + factor.rank])
            start += factor.rank
        return tuple(pieces)

    def __str__(self):
        return 'x'.join(str(factor) for factor in self.factors)


Group = Union[GroupLabel, ProductGroup]


def unitary(n: int) -> GroupLabel:
    return GroupLabel(GroupFamily.U, n)


def special_orthogonal(n: int) -> GroupLabel:
    return GroupLabel(GroupFamily.SO, n)


def orthogonal(n: int) -> GroupLabel:
    return GroupLabel(GroupFamily.O, n)


def symplectic(m: int) -> GroupLabel:
    return GroupLabel(GroupFamily.SP, m)


def su2() -> GroupLabel:
    return GroupLabel(GroupFamily.SU2, 2)


def make_group(factors: Sequence[GroupLabel]) -> Group:
    """ Build a group from factors, collapsing a single factor to itself.
    """

    factors = tuple(factors)
    if len(factors) == 1:
        return factors[0]
    return ProductGroup(factors)


def parse_group(text: str) -> Group:
    """ Parse ``"U(3)"``, ``"SU2"`` or a product such as ``"U(2)xU(1)"``.

    Parameters
    ----------
    text: (str) the rendered group

    Returns
    -------
    (Group) the parsed label
    """

    factors = []
    for piece in text.strip().split('x'):
        piece = piece.strip()
        if piece == 'SU2':
            factors.append(su2())
            continue
        match = _SINGLE.match(piece)
        if match is None:
            raise DomainError(message='cannot parse group label', text=text)
        factors.append(GroupLabel(GroupFamily(match.group(1)), int(match.group(2))))
    return make_group(factors)
