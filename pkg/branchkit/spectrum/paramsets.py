###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Union

from ..oops import DomainError
from ..utils.constants import ParamKind
from ..utils.misc import format_bound, format_rational, parse_bound, parse_rational

__all__ = ['ParamSet', 'a_plus_set', 'a_minus_set', 'gl2r_discrete_params']

Rational = Union[int, Fraction]


def _smallest_above(start: Fraction, step: Fraction, lo: Fraction) -> Fraction:
    return start + (math.floor((lo - start) / step) + 1) * step


def _largest_below(start: Fraction, step: Fraction, hi: Fraction) -> Fraction:
    return start + (math.ceil((hi - start) / step) - 1) * step


def _optional(value: Optional[Rational]) -> Optional[Fraction]:
    return None if value is None else Fraction(value)


@dataclass(frozen=True)
class ParamSet(object):
    """ A set of spectral parameters.

    Countable kinds are ``empty``, ``finite`` (sorted, duplicate free) and
    ``progression`` (``base + step * N0`` inside the open interval (lo, hi)
    with one end infinite, or ``base + step * Z`` with both ends infinite and
    ``base`` the smallest non-negative element). Continuous kinds are
    ``imaginary-halfline`` (t in iR+) and ``real-line``.

    Build instances through the classmethods, which normalise.
    """

    kind: ParamKind
    values: tuple = ()
    base: Optional[Fraction] = None
    step: Optional[Fraction] = None
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None

    @classmethod
    def empty(cls) -> 'ParamSet':
        return cls(ParamKind.EMPTY)

    @classmethod
    def finite(cls, values: Iterable[Rational]) -> 'ParamSet':
        values = tuple(sorted({Fraction(v) for v in values}))
        if not values:
            return cls.empty()
        return cls(ParamKind.FINITE, values=values)

    @classmethod
    def imaginary_halfline(cls) -> 'ParamSet':
        return cls(ParamKind.IMAGINARY_HALFLINE)

    @classmethod
    def real_line(cls) -> 'ParamSet':
        return cls(ParamKind.REAL_LINE)

    @classmethod
    def progression(cls, start: Rational, step: Rational, lo: Optional[Rational] = None,
                    hi: Optional[Rational] = None) -> 'ParamSet':
        """ The set (start + step*Z) cut to the open interval (lo, hi), in canonical form.

        Parameters
        ----------
        start: (Rational) any element of the full progression
        step: (Rational) non-zero spacing; only its absolute value matters
        lo: (Optional[Rational]) open lower end, None for -inf
        hi: (Optional[Rational]) open upper end, None for +inf

        Returns
        -------
        (ParamSet) empty, finite (both ends finite) or a progression
        """

        start, step = Fraction(start), abs(Fraction(step))
        lo, hi = _optional(lo), _optional(hi)
        if step == 0:
            raise DomainError(message='progression step must be non-zero')
        if lo is None and hi is None:
            return cls(ParamKind.PROGRESSION, base=start - math.floor(start / step) * step, step=step)

        if lo is not None and hi is not None:
            if lo >= hi:
                return cls.empty()
            first = _smallest_above(start, step, lo)
            values = []
            while first < hi:
                values.append(first)
                first += step
            return cls.finite(values)
        if hi is not None:
            return cls(ParamKind.PROGRESSION, base=_largest_below(start, step, hi), step=-step, hi=hi)
        return cls(ParamKind.PROGRESSION, base=_smallest_above(start, step, lo), step=step, lo=lo)

    @property
    def is_empty(self) -> bool:
        return self.kind is ParamKind.EMPTY

    @property
    def is_two_sided(self) -> bool:
        return self.kind is ParamKind.PROGRESSION and self.lo is None and self.hi is None

    @property
    def is_countable(self) -> bool:
        return self.kind in (ParamKind.EMPTY, ParamKind.FINITE, ParamKind.PROGRESSION)

    @property
    def is_continuous(self) -> bool:
        return not self.is_countable

    def __contains__(self, value) -> bool:
        if self.kind is ParamKind.REAL_LINE:
            return True
        if self.kind is ParamKind.FINITE:
            return Fraction(value) in self.values
        if self.kind is not ParamKind.PROGRESSION:
            return False
        value = Fraction(value)
        if self.lo is not None and value <= self.lo:
            return False
        if self.hi is not None and value >= self.hi:
            return False
        steps = (value - self.base) / self.step
        return steps.denominator == 1 and (steps >= 0 or self.is_two_sided)

    def intersect(self, lo: Optional[Rational] = None, hi: Optional[Rational] = None) -> 'ParamSet':
        """ Cut a countable set to the open interval (lo, hi).
        """

        lo, hi = _optional(lo), _optional(hi)
        if self.kind is ParamKind.EMPTY:
            return self
        if self.kind is ParamKind.FINITE:
            return ParamSet.finite(v for v in self.values
                                   if (lo is None or v > lo) and (hi is None or v < hi))
        if self.kind is ParamKind.PROGRESSION:
            new_lo = self.lo if lo is None else (lo if self.lo is None else max(lo, self.lo))
            new_hi = self.hi if hi is None else (hi if self.hi is None else min(hi, self.hi))
            return ParamSet.progression(self.base, self.step, new_lo, new_hi)
        raise DomainError(message='only countable parameter sets can be cut to an interval', kind=str(self.kind))

    def elements(self, bound: Rational) -> List[Fraction]:
        """ All elements of absolute value at most ``bound``, ascending.

        Parameters
        ----------
        bound: (Rational) the bound

        Returns
        -------
        (List[Fraction]) the elements
        """

        bound = Fraction(bound)
        if self.kind is ParamKind.EMPTY:
            return []
        if self.kind is ParamKind.FINITE:
            return [v for v in self.values if abs(v) <= bound]
        if self.kind is not ParamKind.PROGRESSION:
            raise DomainError(message='a continuous parameter set has no element listing', kind=str(self.kind))

        if self.is_two_sided:
            low = self.base - math.floor((self.base + bound) / self.step) * self.step
            return [low + i * self.step for i in range(int((bound - low) // self.step) + 1)]

        found, value = [], self.base
        while abs(value) <= bound or (self.step > 0 and value < -bound) or (self.step < 0 and value > bound):
            if abs(value) <= bound and value in self:
                found.append(value)
            value += self.step
        return sorted(found)

    def first(self, count: int) -> List[Fraction]:
        """ The first ``count`` elements in the set's own order (progressions start at ``base``).
        """

        if self.kind is ParamKind.FINITE:
            return list(self.values[:count])
        if self.kind is ParamKind.PROGRESSION:
            return [self.base + i * self.step for i in range(count)]
        if self.kind is ParamKind.EMPTY:
            return []
        raise DomainError(message='a continuous parameter set has no element listing', kind=str(self.kind))

    def sort_key(self) -> tuple:
        def bound(v):
            return (v is None, v if v is not None else 0)

        return (str(self.kind), self.values, self.base or 0, self.step or 0, bound(self.lo), bound(self.hi))

    def to_dict(self) -> Dict:
        dict_ = {'kind': str(self.kind)}
        if self.kind is ParamKind.FINITE:
            dict_['values'] = [format_rational(v) for v in self.values]
        elif self.kind is ParamKind.PROGRESSION:
            dict_['base'] = format_rational(self.base)
            dict_['step'] = format_rational(self.step)
            dict_['interval'] = [format_bound(self.lo, upper=False), format_bound(self.hi, upper=True)]
        return dict_

    @classmethod
    def from_dict(cls, dict_: Dict) -> 'ParamSet':
        try:
            kind = ParamKind(dict_['kind'])
        except (KeyError, ValueError):
            raise DomainError(message='unknown parameter set kind', value=dict_.get('kind'))
        if kind is ParamKind.EMPTY:
            return cls.empty()
        if kind is ParamKind.FINITE:
            return cls.finite(parse_rational(v) for v in dict_.get('values', []))
        if kind is ParamKind.PROGRESSION:
            lo, hi = dict_.get('interval', ['-inf', 'inf'])
            return cls.progression(parse_rational(dict_['base']), parse_rational(dict_['step']),
                                   parse_bound(lo), parse_bound(hi))
        return cls(kind)

    def __str__(self):
        if self.kind is ParamKind.EMPTY:
            return '{}'
        if self.kind is ParamKind.FINITE:
            return '{' + ', '.join(format_rational(v) for v in self.values) + '}'
        if self.kind is ParamKind.PROGRESSION:
            lo, hi = format_bound(self.lo, upper=False), format_bound(self.hi, upper=True)
            return f'{{{format_rational(self.base)} + {format_rational(self.step)}*N0}} in ({lo}, {hi})'
        if self.kind is ParamKind.IMAGINARY_HALFLINE:
            return 'iR+'
        return 'R'


def a_plus_set(p: int, q: int, k: int) -> ParamSet:
    """ (k+n+1+2Z) in (-inf, 0) for p > 1 and in (-(|k|-q), 0) for p = 1, n = p+q.

    Parameters
    ----------
    p: (int) p >= 1
    q: (int) q >= 1
    k: (int) the line bundle degree

    Returns
    -------
    (ParamSet) the set; (x, 0) is empty for x >= 0
    """

    if p < 1 or q < 1:
        raise DomainError(message='parameter sets need p, q >= 1', p=p, q=q)
    start = k + p + q + 1
    if p > 1:
        return ParamSet.progression(start, 2, None, 0)
    lower = -(abs(k) - q)
    if lower >= 0:
        return ParamSet.empty()
    return ParamSet.progression(start, 2, lower, 0)


def a_minus_set(p: int, q: int, k: int) -> ParamSet:
    return a_plus_set(q, p, k)


def gl2r_discrete_params(k: int) -> ParamSet:
    """ {t > 0 : t in |k| - 1 - 2N0}, ascending.
    """

    return ParamSet.finite(range(abs(k) - 1, 0, -2))
