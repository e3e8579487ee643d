###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

from itertools import product
from typing import Iterable, Iterator, List, Sequence

from ..oops import DomainError
from ..utils.constants import GroupFamily
from .groups import Group, GroupLabel

__all__ = ['Weight', 'concat_weights', 'is_dominant', 'dominant_weights']


class Weight(tuple):
    """ An integer highest-weight vector. Product weights are concatenations.
    """

    def __new__(cls, coords: Iterable = ()):
        values = []
        for c in coords:
            value = int(c)
            if value != c:
                raise DomainError(message='weights have integer coordinates', coordinate=c)
            values.append(value)
        return super().__new__(cls, values)

    @property
    def degree(self) -> int:
        return sum(abs(c) for c in self)

    def __repr__(self):
        return f'Weight({tuple(self)})'


def concat_weights(*weights: Sequence[int]) -> Weight:
    return Weight(c for w in weights for c in w)


def _is_dominant_single(group: GroupLabel, weight: Sequence[int]) -> bool:
    decreasing = all(weight[i] >= weight[i + 1] for i in range(len(weight) - 1))
    family = group.family
    if family is GroupFamily.U:
        return decreasing
    if family is GroupFamily.SO and group.n % 2 == 0:
        # D_r: w_1 >= ... >= w_{r-1} >= |w_r|
        if len(weight) == 1:
            return True
        head = weight[:-1]
        return all(head[i] >= head[i + 1] for i in range(len(head) - 1)) and head[-1] >= abs(weight[-1])
    return decreasing and weight[-1] >= 0


def is_dominant(group: Group, weight: Sequence[int]) -> bool:
    """ Whether a weight lies in the dominant chamber of every factor.

    Parameters
    ----------
    group: (Group) the compact group
    weight: (Sequence[int]) the weight, of length the rank of the group

    Returns
    -------
    (bool) True when dominant
    """

    weight = tuple(weight)
    if len(weight) != group.rank:
        raise DomainError(message='weight length does not match the rank', group=str(group), weight=weight)
    return all(_is_dominant_single(factor, piece) for factor, piece in zip(group.factors, group.split(weight)))


def _decreasing(length: int, upper: int, budget: int) -> Iterator[tuple]:
    if length == 0:
        yield ()
        return
    for head in range(upper, -budget - 1, -1):
        if abs(head) > budget:
            continue
        for tail in _decreasing(length - 1, head, budget - abs(head)):
            yield (head,) + tail


def _dominant_single(group: GroupLabel, max_degree: int) -> List[Weight]:
    if group.is_even_orthogonal and group.rank > 1 and group.family is GroupFamily.SO:
        candidates = set()
        for head in _decreasing(group.rank - 1, max_degree, max_degree):
            rest = max_degree - sum(abs(c) for c in head)
            for last in range(-min(rest, head[-1]), min(rest, head[-1]) + 1):
                candidates.add(head + (last,))
    elif group.family is GroupFamily.SO and group.n == 2:
        candidates = {(j,) for j in range(-max_degree, max_degree + 1)}
    else:
        candidates = set(_decreasing(group.rank, max_degree, max_degree))
    return [Weight(w) for w in candidates if _is_dominant_single(group, w)]


def _order_key(weight: Weight):
    return (weight.degree, tuple(-c for c in weight))


def dominant_weights(group: Group, max_degree: int) -> List[Weight]:
    """ All dominant weights of degree at most ``max_degree``.

    Parameters
    ----------
    group: (Group) the compact group
    max_degree: (int) bound on the sum of absolute coordinates

    Returns
    -------
    (List[Weight]) the weights, ordered by degree and then lexicographically descending
    """

    if max_degree < 0:
        return []
    per_factor = [_dominant_single(factor, max_degree) for factor in group.factors]
    found = []
    for pieces in product(*per_factor):
        weight = Weight(c for piece in pieces for c in piece)
        if weight.degree <= max_degree:
            found.append(weight)
    return sorted(found, key=_order_key)
