###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import logging
import re
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from ..oops import DomainError
from ..utils.constants import Measure, SeriesKind
from ..utils.misc import format_rational, parse_rational
from .paramsets import ParamSet

__all__ = ['SeriesTag', 'parse_series', 'ComponentIndex', 'SpectrumComponent', 'Spectrum', 'merge']

_SERIES = re.compile(r'^(\w+)\{(.*)\}$')


@dataclass(frozen=True)
class SeriesTag(object):
    """ A structured representation label rendered as ``Kind{key=value,...}``.
    """

    kind: SeriesKind
    data: Tuple[Tuple[str, str], ...] = ()

    @classmethod
    def of(cls, kind: SeriesKind, **data) -> 'SeriesTag':
        pairs = []
        for key, value in data.items():
            if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
                value = format_rational(value)
            pairs.append((key, str(value)))
        return cls(SeriesKind(str(kind)), tuple(pairs))

    def get(self, key: str, default: Optional[str] = None) -> Optional[str]:
        return dict(self.data).get(key, default)

    def get_int(self, key: str) -> int:
        value = self.get(key)
        if value is None:
            raise DomainError(message='series tag has no such field', series=str(self), field=key)
        return int(value)

    def get_rational(self, key: str) -> Fraction:
        return parse_rational(self.get(key, '0'))

    def __str__(self):
        return f'{self.kind}{{' + ','.join(f'{key}={value}' for key, value in self.data) + '}'


def parse_series(text: str) -> SeriesTag:
    match = _SERIES.match(text.strip())
    if match is None:
        raise DomainError(message='malformed series tag', series=text)
    try:
        kind = SeriesKind(match.group(1))
    except ValueError:
        raise DomainError(message='unknown series kind', series=text)
    pairs = []
    if match.group(2):
        for piece in match.group(2).split(','):
            key, sep, value = piece.partition('=')
            if not sep:
                raise DomainError(message='malformed series field', series=text, field=piece)
            pairs.append((key.strip(), value.strip()))
    return SeriesTag(kind, tuple(pairs))


@dataclass(frozen=True)
class ComponentIndex(object):
    """ A countable label running over a family of components, e.g. k' in Z.
    """

    name: str
    params: ParamSet

    def to_dict(self) -> Dict:
        return {'name': self.name, 'params': self.params.to_dict()}

    @classmethod
    def from_dict(cls, dict_: Dict) -> 'ComponentIndex':
        return cls(dict_['name'], ParamSet.from_dict(dict_['params']))


@dataclass(frozen=True)
class SpectrumComponent(object):
    """ One summand of a branching law.

    Continuous parameter sets carry the Lebesgue measure, countable ones
    the counting measure.
    """

    group: str
    series: SeriesTag
    params: ParamSet
    multiplicity: int = 1
    measure: Measure = Measure.COUNTING
    index: Optional[ComponentIndex] = None
    annotations: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'measure', Measure(str(self.measure)))
        object.__setattr__(self, 'annotations', tuple(sorted(set(self.annotations))))
        if int(self.multiplicity) < 1:
            raise DomainError(message='multiplicities are positive', multiplicity=self.multiplicity)
        lebesgue = self.measure is Measure.LEBESGUE
        if lebesgue != self.params.is_continuous:
            raise DomainError(message='Lebesgue measure goes with continuous parameters only',
                              measure=str(self.measure), params=str(self.params))

    @property
    def key(self) -> tuple:
        return (self.group, str(self.series), self.params, self.index)

    def sort_key(self) -> tuple:
        index = (self.index.name, self.index.params.sort_key()) if self.index else ('', ())
        return (self.group, str(self.series), index, self.params.sort_key())

    def with_params(self, params: ParamSet) -> 'SpectrumComponent':
        return replace(self, params=params)

    def to_dict(self) -> Dict:
        dict_ = {
            'group': self.group,
            'series': str(self.series),
            'params': self.params.to_dict(),
            'multiplicity': int(self.multiplicity),
            'measure': str(self.measure),
        }
        if self.index is not None:
            dict_['index'] = self.index.to_dict()
        if self.annotations:
            dict_['annotations'] = list(self.annotations)
        return dict_

    @classmethod
    def from_dict(cls, dict_: Dict) -> 'SpectrumComponent':
        index = dict_.get('index')
        return cls(group=dict_['group'],
                   series=parse_series(dict_['series']),
                   params=ParamSet.from_dict(dict_['params']),
                   multiplicity=int(dict_.get('multiplicity', 1)),
                   measure=Measure(dict_.get('measure', 'counting')),
                   index=ComponentIndex.from_dict(index) if index else None,
                   annotations=tuple(dict_.get('annotations', ())))

    def __str__(self):
        mult = f'{self.multiplicity}*' if self.multiplicity != 1 else ''
        index = f'sum over {self.index.name} in {self.index.params} of ' if self.index else ''
        over = 'integral' if self.measure is Measure.LEBESGUE else 'sum'
        return f'{index}{mult}{over} over {self.params}: {self.series} of {self.group}'


@dataclass(frozen=True)
class Spectrum(object):
    """ A branching law: its components plus the theorem it came from.
    """

    provenance: str
    components: Tuple[SpectrumComponent, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'components', tuple(self.components))

    def merge(self) -> 'Spectrum':
        """ Collapse components sharing group, series, parameters and index.

        Returns
        -------
        (Spectrum) multiplicities summed, annotations united, deterministically ordered
        """

        merged: Dict[tuple, SpectrumComponent] = {}
        for component in self.components:
            known = merged.get(component.key)
            if known is None:
                merged[component.key] = component
            else:
                merged[component.key] = replace(known, multiplicity=known.multiplicity + component.multiplicity,
                                                annotations=known.annotations + component.annotations)
        ordered = sorted(merged.values(), key=lambda c: c.sort_key())
        return Spectrum(self.provenance, tuple(ordered))

    def truncate(self, bound: int) -> 'Spectrum':
        """ Expand countable families into single-parameter components up to ``bound``.

        Indexed families are listed for index values of absolute value at most
        ``bound``; countable parameter families for parameters of absolute value
        at most ``bound``. Continuous parameters are kept as they are.

        Parameters
        ----------
        bound: (int) the truncation bound

        Returns
        -------
        (Spectrum) the expanded spectrum
        """

        expanded: List[SpectrumComponent] = []
        for component in self.components:
            indexed = [component]
            if component.index is not None:
                indexed = [replace(component, index=ComponentIndex(component.index.name, ParamSet.finite([v])))
                           for v in component.index.params.elements(bound)]
            for item in indexed:
                if item.params.is_countable:
                    expanded.extend(item.with_params(ParamSet.finite([v])) for v in item.params.elements(bound))
                else:
                    expanded.append(item)
        logging.debug(f'truncated {self.provenance} at {bound}: {len(self.components)} -> {len(expanded)} components')
        return Spectrum(self.provenance, tuple(expanded))

    def discrete(self) -> List[SpectrumComponent]:
        return [c for c in self.components if c.measure is Measure.COUNTING]

    def continuous(self) -> List[SpectrumComponent]:
        return [c for c in self.components if c.measure is Measure.LEBESGUE]

    def to_dict(self) -> Dict:
        return {'provenance': self.provenance, 'components': [c.to_dict() for c in self.components]}

    @classmethod
    def from_dict(cls, dict_: Dict) -> 'Spectrum':
        return cls(dict_['provenance'], tuple(SpectrumComponent.from_dict(c) for c in dict_.get('components', [])))

    def __iter__(self) -> Iterator[SpectrumComponent]:
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __str__(self):
        lines = [f'{self.provenance}:']
        lines.extend(f'  {component}' for component in self.components)
        return '\n'.join(lines)


def merge(spectrum: Spectrum) -> Spectrum:
    return spectrum.merge()
