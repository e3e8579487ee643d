###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import re
from fractions import Fraction
from typing import Optional, Tuple, Union

from ..oops import DomainError

__all__ = ['parse_rational', 'format_rational', 'parse_range', 'format_bound', 'parse_bound']

_RATIONAL = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')
_RANGE = re.compile(r'^\s*([+-]?\d+)\s*(?:\.\.\s*([+-]?\d+))?\s*$')


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """ Parse an exact rational written as ``"a"`` or ``"a/b"``.

    Parameters
    ----------
    text: (Union[str, int, Fraction]) the rational to parse

    Returns
    -------
    (Fraction) the exact value
    """

    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    match = _RATIONAL.match(str(text))
    if match is None:
        raise DomainError(message='not an exact rational, expected "a" or "a/b"', value=text)
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise DomainError(message='zero denominator', value=text)
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def format_rational(value: Union[int, Fraction]) -> str:
    return str(Fraction(value))


def format_bound(value: Optional[Fraction], upper: bool) -> str:
    if value is None:
        return 'inf' if upper else '-inf'
    return format_rational(value)


def parse_bound(text: str) -> Optional[Fraction]:
    if text in ('inf', '+inf', '-inf'):
        return None
    return parse_rational(text)


def parse_range(text: Union[str, int]) -> Tuple[int, int]:
    """ Parse an inclusive integer range ``"lo..hi"`` or a single integer.

    Parameters
    ----------
    text: (Union[str, int]) the range

    Returns
    -------
    (Tuple[int, int]) the bounds, lo <= hi
    """

    if isinstance(text, int):
        return text, text
    match = _RANGE.match(text)
    if match is None:
        raise DomainError(message='not an integer range, expected "lo..hi" or "n"', value=text)
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if lo > hi:
        raise DomainError(message='empty range', value=text)
    return lo, hi
