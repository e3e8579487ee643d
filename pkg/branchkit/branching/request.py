###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

from ..oops import DomainError, RoutedError
from ..utils.constants import SubgroupKind
from ..utils.misc import format_rational, parse_rational

__all__ = ['BranchRequest']


@dataclass(frozen=True)
class BranchRequest(object):
    """ Restriction of pi_{i lambda, k} of GL(n,C) to one symmetric subgroup.

    ``p``/``q`` are needed by H1 and H2, ``m`` by H3 and H4 (``m`` defaults to n/2).
    """

    n: int
    subgroup: SubgroupKind
    k: int = 0
    lam: Fraction = Fraction(0)
    p: Optional[int] = None
    q: Optional[int] = None
    m: Optional[int] = None

    def __post_init__(self):
        try:
            subgroup = SubgroupKind(str(self.subgroup))
        except ValueError:
            raise DomainError(message='unknown subgroup, expected one of K, H1, ..., H6', subgroup=self.subgroup)
        object.__setattr__(self, 'subgroup', subgroup)
        object.__setattr__(self, 'lam', parse_rational(self.lam))
        if subgroup in (SubgroupKind.H3, SubgroupKind.H4) and self.m is None and self.n % 2 == 0:
            object.__setattr__(self, 'm', self.n // 2)

    def validate(self) -> 'BranchRequest':
        """ Check the preconditions of the subgroup.

        Returns
        -------
        (BranchRequest) self, for chaining

        Raises
        ------
        DomainError naming the violated precondition; RoutedError for H6 with n = 2
        """

        if self.n < 2:
            raise DomainError(message='n >= 2 required', n=self.n)
        if self.subgroup in (SubgroupKind.H1, SubgroupKind.H2):
            if self.p is None or self.q is None:
                raise DomainError(message=f'{self.subgroup} needs p and q', subgroup=str(self.subgroup))
            if self.p < 1 or self.q < 1:
                raise DomainError(message=f'{self.subgroup} needs p, q >= 1', p=self.p, q=self.q)
            if self.p + self.q != self.n:
                raise DomainError(message=f'{self.subgroup} needs p + q = n', n=self.n, p=self.p, q=self.q)
        if self.subgroup in (SubgroupKind.H3, SubgroupKind.H4):
            if self.n % 2:
                raise DomainError(message=f'{self.subgroup} needs n = 2m (n even)', n=self.n)
            if self.m is None or 2 * self.m != self.n:
                raise DomainError(message=f'{self.subgroup} needs n = 2m', n=self.n, m=self.m)
        if self.subgroup is SubgroupKind.H6 and self.n < 3:
            raise RoutedError(message='H6 with n = 2 is the U(1,1) case of H2', route='H2(1,1)', n=self.n)
        return self

    def describe(self) -> str:
        fields = [f'n={self.n}']
        if self.subgroup in (SubgroupKind.H1, SubgroupKind.H2):
            fields += [f'p={self.p}', f'q={self.q}']
        if self.subgroup in (SubgroupKind.H3, SubgroupKind.H4):
            fields.append(f'm={self.m}')
        fields += [f'k={self.k}', f'lambda={format_rational(self.lam)}']
        return f'{self.subgroup}(' + ','.join(fields) + ')'

    def to_dict(self) -> Dict:
        dict_ = {'n': self.n, 'subgroup': str(self.subgroup), 'k': self.k, 'lambda': format_rational(self.lam)}
        for key in ('p', 'q', 'm'):
            if getattr(self, key) is not None:
                dict_[key] = getattr(self, key)
        return dict_

    @classmethod
    def from_dict(cls, dict_: Dict) -> 'BranchRequest':
        return cls(n=int(dict_['n']), subgroup=dict_['subgroup'], k=int(dict_.get('k', 0)),
                   lam=parse_rational(dict_.get('lambda', '0')), p=dict_.get('p'), q=dict_.get('q'),
                   m=dict_.get('m'))
