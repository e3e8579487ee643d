###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

from dataclasses import dataclass

from ..oops import DomainError
from ..utils.constants import HarmonicKind

__all__ = ['HarmonicLabel', 'parse_harmonic']


@dataclass(frozen=True)
class HarmonicLabel(object):
    """ H^j(R^N), H^{a,b}(C^n), H^{a,b}(H^m) or the SU(2)-module V_j.

    ``n`` is N, n, m or 2 for SU2; ``alpha`` carries j for the one-index kinds.
    """

    kind: HarmonicKind
    n: int
    alpha: int
    beta: int = 0

    def __post_init__(self):
        try:
            kind = HarmonicKind(str(self.kind))
        except ValueError:
            raise DomainError(message='unknown harmonic kind', kind=self.kind)
        object.__setattr__(self, 'kind', kind)
        n, alpha, beta = int(self.n), int(self.alpha), int(self.beta)

        if alpha < 0 or beta < 0:
            raise DomainError(message='harmonic degrees are non-negative', label=self._render(kind, n, alpha, beta))
        if kind is HarmonicKind.REAL and (n < 2 or beta != 0):
            raise DomainError(message='H^j(R^N) needs N >= 2', N=n)
        if kind is HarmonicKind.COMPLEX and n < 1:
            raise DomainError(message='H^{a,b}(C^n) needs n >= 1', n=n)
        if kind is HarmonicKind.QUATERNIONIC:
            if n < 1:
                raise DomainError(message='H^{a,b}(H^m) needs m >= 1', m=n)
            if alpha < beta:
                raise DomainError(message='H^{a,b}(H^m) needs a >= b', alpha=alpha, beta=beta)
            if beta > 0 and n < 2:
                raise DomainError(message='H^{a,b}(H^m) with b > 0 needs m >= 2', m=n, beta=beta)
        if kind is HarmonicKind.SU2 and (n != 2 or beta != 0):
            raise DomainError(message='V_j carries n = 2 and a single degree')
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, 'alpha', alpha)
        object.__setattr__(self, 'beta', beta)

    @classmethod
    def real(cls, N: int, j: int) -> 'HarmonicLabel':
        return cls(HarmonicKind.REAL, N, j)

    @classmethod
    def complex(cls, n: int, alpha: int, beta: int) -> 'HarmonicLabel':
        return cls(HarmonicKind.COMPLEX, n, alpha, beta)

    @classmethod
    def quaternionic(cls, m: int, alpha: int, beta: int) -> 'HarmonicLabel':
        return cls(HarmonicKind.QUATERNIONIC, m, alpha, beta)

    @classmethod
    def su2(cls, j: int) -> 'HarmonicLabel':
        return cls(HarmonicKind.SU2, 2, j)

    @property
    def is_zero(self) -> bool:
        """ H^{a,b}(C) vanishes when both degrees are positive.
        """

        return self.kind is HarmonicKind.COMPLEX and self.n == 1 and self.alpha * self.beta != 0

    @property
    def degree(self) -> int:
        return self.alpha + self.beta

    @staticmethod
    def _render(kind, n, alpha, beta) -> str:
        if kind is HarmonicKind.REAL:
            return f'H^{alpha}(R^{n})'
        if kind is HarmonicKind.COMPLEX:
            return f'H^{{{alpha},{beta}}}(C^{n})'
        if kind is HarmonicKind.QUATERNIONIC:
            return f'H^{{{alpha},{beta}}}(H^{n})'
        return f'V_{alpha}'

    def __str__(self):
        return self._render(self.kind, self.n, self.alpha, self.beta)


def parse_harmonic(text: str) -> HarmonicLabel:
    """ Parse ``"R:N:j"``, ``"C:n:a:b"``, ``"H:m:a:b"`` or ``"SU2:j"``.

    Parameters
    ----------
    text: (str) the label spec

    Returns
    -------
    (HarmonicLabel) the label
    """

    pieces = [p.strip() for p in str(text).split(':')]
    arity = {'R': 3, 'C': 4, 'H': 4, 'SU2': 2}
    if not pieces or pieces[0] not in arity or len(pieces) != arity[pieces[0]]:
        raise DomainError(message='malformed harmonic spec, expected R:N:j, C:n:a:b, H:m:a:b or SU2:j', spec=text)
    try:
        numbers = [int(p) for p in pieces[1:]]
    except ValueError:
        raise DomainError(message='harmonic spec fields must be integers', spec=text)
    if pieces[0] == 'SU2':
        return HarmonicLabel.su2(numbers[0])
    return HarmonicLabel(HarmonicKind(pieces[0]), *numbers)
