###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

from functools import lru_cache
from typing import Sequence

from ..oops import DomainError
from ..lattice import Group, Weight, is_dominant
from .embeddings import TorusEmbedding, restrict
from .weyl_character import IrrepDecomposition, decompose, irreducible_character

__all__ = ['branch_irreducible', 'frobenius_multiplicity']


@lru_cache(maxsize=1024)
def _branch_cached(emb: TorusEmbedding, sigma: tuple) -> IrrepDecomposition:
    return decompose(restrict(irreducible_character(emb.ambient, sigma), emb), emb.sub)


def branch_irreducible(emb: TorusEmbedding, sigma: Sequence[int]) -> IrrepDecomposition:
    """ Decompose the irreducible ``sigma`` of ``emb.ambient`` under ``emb.sub``.
    """

    return _branch_cached(emb, tuple(Weight(sigma)))


def frobenius_multiplicity(ambient: Group, sigma: Sequence[int], sub: Group, emb: TorusEmbedding,
                           tau: Sequence[int]) -> int:
    """ Multiplicity of ``sigma`` in the representation induced from ``tau``.

    By Frobenius reciprocity this is the multiplicity of ``tau`` in ``sigma``
    restricted to ``sub``.

    Parameters
    ----------
    ambient: (Group) the compact group
    sigma: (Sequence[int]) dominant weight of ``ambient``
    sub: (Group) the compact subgroup
    emb: (TorusEmbedding) embedding of ``sub`` into ``ambient``
    tau: (Sequence[int]) dominant weight of ``sub``

    Returns
    -------
    (int) the multiplicity, possibly 0
    """

    if emb.ambient != ambient or emb.sub != sub:
        raise DomainError(message='embedding does not match the groups', embedding=emb.name,
                          ambient=str(ambient), sub=str(sub))
    if not is_dominant(sub, tau):
        raise DomainError(message='inducing weight is not dominant', group=str(sub), weight=tuple(tau))
    return branch_irreducible(emb, sigma).multiplicity(tau)
