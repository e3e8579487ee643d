###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

from types import MappingProxyType
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union

from ..oops import DomainError
from ..lattice import Group, weyl_group

__all__ = ['LaurentChar', 'torus_variables']

_FACTOR_LETTERS = 'xywuvst'

Exponent = Tuple[int, ...]


def torus_variables(group: Group) -> Tuple[str, ...]:
    """ Torus coordinate names: ``z1..zr`` for one factor, ``x1.., y1..`` for products.
    """

    factors = group.factors
    if len(factors) == 1:
        return tuple(f'z{i + 1}' for i in range(group.rank))
    names = []
    for index, factor in enumerate(factors):
        letter = _FACTOR_LETTERS[index % len(_FACTOR_LETTERS)]
        names.extend(f'{letter}{i + 1}' for i in range(factor.rank))
    return tuple(names)


class LaurentChar(object):
    """ A sparse Laurent polynomial with integer coefficients over named torus coordinates.

    Terms map exponent vectors to non-zero integers; zero coefficients are
    never stored and instances are not mutated after construction.
    """

    __slots__ = ('_variables', '_terms')

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Sequence[int], int]] = None):
        self._variables = tuple(variables)
        clean: Dict[Exponent, int] = {}
        for exponent, coeff in (terms or {}).items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != len(self._variables):
                raise DomainError(message='exponent length does not match the variables',
                                  variables=self._variables, exponent=exponent)
            coeff = int(coeff)
            if coeff:
                clean[exponent] = clean.get(exponent, 0) + coeff
        self._terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def monomial(cls, variables: Sequence[str], exponent: Sequence[int], coeff: int = 1) -> 'LaurentChar':
        return cls(variables, {tuple(exponent): coeff})

    @classmethod
    def one(cls, variables: Sequence[str]) -> 'LaurentChar':
        return cls(variables, {(0,) * len(variables): 1})

    @property
    def variables(self) -> Tuple[str, ...]:
        return self._variables

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exponent: Sequence[int]) -> int:
        return self._terms.get(tuple(exponent), 0)

    def dimension(self) -> int:
        """ Value at the all-ones point of the torus.
        """

        return sum(self._terms.values())

    def degree(self) -> int:
        return max((sum(abs(e) for e in exponent) for exponent in self._terms), default=0)

    def is_zero(self) -> bool:
        return not self._terms

    def _check_compatible(self, other: 'LaurentChar'):
        if len(other._variables) != len(self._variables):
            raise DomainError(message='characters live on tori of different rank',
                              left=self._variables, right=other._variables)

    def __add__(self, other: 'LaurentChar') -> 'LaurentChar':
        self._check_compatible(other)
        terms = dict(self._terms)
        for exponent, coeff in other._terms.items():
            terms[exponent] = terms.get(exponent, 0) + coeff
        return LaurentChar(self._variables, terms)

    def __neg__(self) -> 'LaurentChar':
        return LaurentChar(self._variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: 'LaurentChar') -> 'LaurentChar':
        return self + (-other)

    def __mul__(self, other: Union['LaurentChar', int]) -> 'LaurentChar':
        if isinstance(other, int):
            return LaurentChar(self._variables, {e: c * other for e, c in self._terms.items()})
        self._check_compatible(other)
        terms: Dict[Exponent, int] = {}
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                exponent = tuple(x + y for x, y in zip(left, right))
                terms[exponent] = terms.get(exponent, 0) + a * b
        return LaurentChar(self._variables, terms)

    def __rmul__(self, other: int) -> 'LaurentChar':
        return self * other

    def tensor(self, other: 'LaurentChar', variables: Optional[Sequence[str]] = None) -> 'LaurentChar':
        """ Outer product on the concatenated torus.

        Parameters
        ----------
        other: (LaurentChar) the second factor
        variables: (Optional[Sequence[str]]) names for the concatenated coordinates

        Returns
        -------
        (LaurentChar) the character of the external tensor product
        """

        names = tuple(variables) if variables is not None else self._variables + other._variables
        terms = {}
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                terms[left + right] = a * b
        return LaurentChar(names, terms)

    def is_weyl_symmetric(self, group: Group) -> bool:
        if len(self._variables) != group.rank:
            return False
        for element in weyl_group(group):
            for exponent, coeff in self._terms.items():
                if self._terms.get(element.apply(exponent), 0) != coeff:
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, LaurentChar):
            return NotImplemented
        return self._variables == other._variables and self._terms == other._terms

    def __hash__(self):
        return hash((self._variables, frozenset(self._terms.items())))

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[Exponent]:
        return iter(sorted(self._terms, reverse=True))

    def __repr__(self):
        return f'LaurentChar({self._variables}, {dict(sorted(self._terms.items(), reverse=True))})'

    def __str__(self):
        if not self._terms:
            return '0'
        pieces = []
        for exponent in sorted(self._terms, reverse=True):
            coeff = self._terms[exponent]
            factors = []
            for name, e in zip(self._variables, exponent):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f'{name}^{e}')
            body = '*'.join(factors)
            if not body:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append(body)
            elif coeff == -1:
                pieces.append(f'-{body}')
            else:
                pieces.append(f'{coeff}*{body}')
        return ' + '.join(pieces).replace('+ -', '- ')
