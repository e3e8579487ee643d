###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, Sequence, Tuple

from ..oops import DomainError, ExactDivisionError, NotACharacterError, ResourceLimitError
from ..utils.constants import GroupFamily, get_degree_cap
from ..lattice import (Group, GroupLabel, Weight, is_dominant, positive_roots, rho, special_orthogonal,
                       weyl_dim, weyl_group)
from .laurent import LaurentChar, torus_variables

__all__ = ['irreducible_character', 'decompose', 'IrrepDecomposition']

Exponent = Tuple[int, ...]


def _divide_by_root(terms: Dict[Exponent, int], root: Exponent) -> Dict[Exponent, int]:
    """ Exact quotient of ``terms`` by ``1 - e^{-root}``, walking each root string.
    """

    lead = next(i for i, c in enumerate(root) if c)
    step = root[lead]
    strings = defaultdict(dict)
    for exponent, coeff in terms.items():
        position = exponent[lead] // step
        base = tuple(e - position * r for e, r in zip(exponent, root))
        strings[base][position] = coeff

    quotient = {}
    for base, column in strings.items():
        positions = sorted(column, reverse=True)
        running = 0
        for index, high in enumerate(positions):
            running += column[high]
            if running == 0:
                continue
            if index + 1 == len(positions):
                raise ExactDivisionError(message='Weyl denominator left a remainder',
                                         root=root, string=base, remainder=running)
            low = positions[index + 1]
            for position in range(high, low, -1):
                quotient[tuple(b + position * r for b, r in zip(base, root))] = running
    return quotient


def _weyl_numerator(group: GroupLabel, hw: Exponent) -> Dict[Exponent, int]:
    shift = rho(group)
    shifted = tuple(Fraction(h) + r for h, r in zip(hw, shift))
    terms: Dict[Exponent, int] = {}
    for element in weyl_group(group):
        moved = element.apply(shifted)
        exponent = []
        for m, r in zip(moved, shift):
            value = m - r
            if value.denominator != 1:
                raise ExactDivisionError(message='numerator exponent is not integral', group=str(group), weight=hw)
            exponent.append(int(value))
        exponent = tuple(exponent)
        terms[exponent] = terms.get(exponent, 0) + element.det
    return {e: c for e, c in terms.items() if c}


@lru_cache(maxsize=2048)
def _connected_character(group: GroupLabel, hw: Exponent) -> Tuple[Tuple[Exponent, int], ...]:
    terms = _weyl_numerator(group, hw)
    for root in positive_roots(group):
        terms = _divide_by_root(terms, root)
    return tuple(sorted(terms.items()))


def _single_character(group: GroupLabel, hw: Exponent) -> Dict[Exponent, int]:
    if group.family is GroupFamily.O:
        connected = special_orthogonal(group.n)
        terms = dict(_connected_character(connected, hw))
        if group.n % 2 == 0 and hw[-1] != 0:
            flipped = hw[:-1] + (-hw[-1],)
            for exponent, coeff in _connected_character(connected, flipped):
                terms[exponent] = terms.get(exponent, 0) + coeff
        return terms
    return dict(_connected_character(group, hw))


def irreducible_character(group: Group, hw: Sequence[int]) -> LaurentChar:
    """ Weyl character formula: alternating numerator divided exactly by the denominator.

    Parameters
    ----------
    group: (Group) the compact group, possibly a product
    hw: (Sequence[int]) a dominant highest weight

    Returns
    -------
    (LaurentChar) the character on the maximal torus of ``group``
    """

    hw = tuple(int(c) for c in hw)
    if not is_dominant(group, hw):
        raise DomainError(message='highest weight is not dominant', group=str(group), weight=hw)
    cap = get_degree_cap()
    if Weight(hw).degree > cap:
        raise ResourceLimitError(message='degree budget exceeded', group=str(group), weight=hw, cap=cap)

    character = LaurentChar.one(())
    for factor, piece in zip(group.factors, group.split(hw)):
        character = character.tensor(LaurentChar(torus_variables(factor), _single_character(factor, tuple(piece))))
    character = LaurentChar(torus_variables(group), character.terms)
    if character.dimension() != weyl_dim(group, hw):
        raise ExactDivisionError(message='character dimension disagrees with the Weyl dimension',
                                 group=str(group), weight=hw)
    return character


@dataclass(frozen=True)
class IrrepDecomposition(object):
    """ A multiset of highest weights of ``group``.
    """

    group: Group
    entries: Tuple[Tuple[Weight, int], ...]

    def __post_init__(self):
        merged: Dict[Weight, int] = {}
        for weight, multiplicity in self.entries:
            weight = Weight(weight)
            if multiplicity < 1:
                raise DomainError(message='multiplicities are positive', weight=weight, multiplicity=multiplicity)
            if not is_dominant(self.group, weight):
                raise DomainError(message='decomposition weights are dominant', group=str(self.group), weight=weight)
            merged[weight] = merged.get(weight, 0) + int(multiplicity)
        object.__setattr__(self, 'entries', tuple(sorted(merged.items(), reverse=True)))

    @classmethod
    def from_dict(cls, group: Group, dict_: Dict[Sequence[int], int]) -> 'IrrepDecomposition':
        return cls(group, tuple((Weight(w), m) for w, m in dict_.items() if m))

    def as_dict(self) -> Dict[Weight, int]:
        return dict(self.entries)

    def multiplicity(self, weight: Sequence[int]) -> int:
        return self.as_dict().get(Weight(weight), 0)

    def weights(self) -> set:
        return {weight for weight, _ in self.entries}

    def dimension(self) -> int:
        return sum(m * weyl_dim(self.group, w) for w, m in self.entries)

    def __iter__(self) -> Iterator[Tuple[Weight, int]]:
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, weight):
        return Weight(weight) in self.as_dict()


def decompose(char: LaurentChar, group: Group) -> IrrepDecomposition:
    """ Greedy highest-weight extraction.

    The lexicographically largest dominant exponent is always the highest
    weight of a constituent; its multiple of that irreducible character is
    removed until nothing is left.

    Parameters
    ----------
    char: (LaurentChar) a character of ``group``
    group: (Group) the compact group

    Returns
    -------
    (IrrepDecomposition) the unique decomposition
    """

    if len(char.variables) != group.rank:
        raise DomainError(message='character and group have different ranks',
                          group=str(group), variables=char.variables)
    remainder = dict(char.items())
    dominance: Dict[Exponent, bool] = {}
    found: Dict[Weight, int] = {}
    while remainder:
        candidates = []
        for exponent in remainder:
            if exponent not in dominance:
                dominance[exponent] = is_dominant(group, exponent)
            if dominance[exponent]:
                candidates.append(exponent)
        if not candidates:
            raise NotACharacterError(message='remainder has no dominant exponent', group=str(group),
                                     remainder=dict(list(remainder.items())[:4]))
        lead = max(candidates)
        coeff = remainder[lead]
        if coeff < 0:
            raise NotACharacterError(message='negative coefficient on a dominant leading term',
                                     group=str(group), weight=lead, coefficient=coeff)
        for exponent, value in irreducible_character(group, lead).items():
            left = remainder.get(exponent, 0) - coeff * value
            if left:
                remainder[exponent] = left
            else:
                remainder.pop(exponent, None)
        found[Weight(lead)] = coeff

    decomposition = IrrepDecomposition(group, tuple(found.items()))
    if decomposition.dimension() != char.dimension():
        raise NotACharacterError(message='dimension not conserved by the decomposition', group=str(group))
    logging.debug(f'decomposed a character of {group} into {len(decomposition)} irreducibles')
    return decomposition
