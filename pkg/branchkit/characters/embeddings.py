###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

from typing import Dict

import numpy as np

from ..oops import DomainError, NotACharacterError
from ..utils.constants import GroupFamily
from ..lattice import (Group, make_group, orthogonal, special_orthogonal, su2, symplectic,
                       unitary)
from .laurent import LaurentChar, torus_variables

__all__ = ['TorusEmbedding', 'restrict', 'compose', 'unitary_block', 'symplectic_in_unitary',
           'orthogonal_in_unitary', 'unitary_in_orthogonal', 'symplectic_in_orthogonal', 'rotation_block',
           'quaternionic_line', 'complex_line_in_symplectic', 'diagonal_torus_in_su2', 'levi_diagonal']


class TorusEmbedding(object):
    """ A subgroup embedding seen on maximal tori.

    ``matrix`` has shape (ambient rank) x (subgroup rank); an ambient exponent
    vector ``e`` restricts to ``matrix.T @ e``.
    """

    def __init__(self, name: str, ambient: Group, sub: Group, matrix):
        matrix = np.array(matrix, dtype=np.int64).reshape(ambient.rank, sub.rank)
        matrix.setflags(write=False)
        self.name = name
        self.ambient = ambient
        self.sub = sub
        self.matrix = matrix

    def _key(self):
        return (self.name, self.ambient, self.sub, self.matrix.tobytes())

    def __eq__(self, other):
        if not isinstance(other, TorusEmbedding):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f'{super().__repr__()}: {self.name}'


def restrict(char: LaurentChar, emb: TorusEmbedding) -> LaurentChar:
    """ Push a character of the ambient torus down to the subgroup torus.

    Parameters
    ----------
    char: (LaurentChar) a character on the ambient torus of ``emb``
    emb: (TorusEmbedding) the embedding

    Returns
    -------
    (LaurentChar) the restricted character, colliding exponents summed
    """

    if len(char.variables) != emb.ambient.rank:
        raise DomainError(message='character does not live on the ambient torus',
                          embedding=emb.name, variables=char.variables)
    variables = torus_variables(emb.sub)
    if char.is_zero():
        return LaurentChar(variables)
    exponents = list(char.terms)
    coefficients = [char.terms[e] for e in exponents]
    pushed = np.array(exponents, dtype=np.int64).reshape(len(exponents), emb.ambient.rank) @ emb.matrix

    terms: Dict[tuple, int] = {}
    for row, coeff in zip(pushed.tolist(), coefficients):
        key = tuple(row)
        terms[key] = terms.get(key, 0) + coeff
    restricted = LaurentChar(variables, terms)
    if restricted.dimension() != char.dimension():
        raise NotACharacterError(message='restriction did not conserve dimension', embedding=emb.name)
    return restricted


def compose(outer: TorusEmbedding, inner: TorusEmbedding) -> TorusEmbedding:
    """ Chain ``inner.sub < inner.ambient = outer.sub < outer.ambient``.
    """

    if inner.ambient.rank != outer.sub.rank or str(inner.ambient) != str(outer.sub):
        raise DomainError(message='embeddings do not chain', outer=outer.name, inner=inner.name)
    return TorusEmbedding(f'{inner.sub}<{outer.ambient}', outer.ambient, inner.sub, outer.matrix @ inner.matrix)


def unitary_block(p: int, q: int) -> TorusEmbedding:
    return TorusEmbedding(f'U({p})xU({q})<U({p + q})', unitary(p + q),
                          make_group([unitary(p), unitary(q)]), np.eye(p + q, dtype=np.int64))


def symplectic_in_unitary(m: int) -> TorusEmbedding:
    """ Sp(m) < U(2m): ambient eigenvalues (z_1, z_1^-1, ..., z_m, z_m^-1).
    """

    matrix = np.zeros((2 * m, m), dtype=np.int64)
    for i in range(m):
        matrix[2 * i, i] = 1
        matrix[2 * i + 1, i] = -1
    return TorusEmbedding(f'Sp({m})<U({2 * m})', unitary(2 * m), symplectic(m), matrix)


def orthogonal_in_unitary(n: int, family: GroupFamily = GroupFamily.O) -> TorusEmbedding:
    """ SO(n) or O(n) inside U(n): eigenvalues (z_1, z_1^-1, ..., [1 for odd n]).
    """

    sub = orthogonal(n) if family == GroupFamily.O else special_orthogonal(n)
    matrix = np.zeros((n, n // 2), dtype=np.int64)
    for i in range(n // 2):
        matrix[2 * i, i] = 1
        matrix[2 * i + 1, i] = -1
    return TorusEmbedding(f'{sub}<U({n})', unitary(n), sub, matrix)


def unitary_in_orthogonal(n: int) -> TorusEmbedding:
    """ U(n) < O(2n) through the complex structure; the tori coincide.
    """

    return TorusEmbedding(f'U({n})<O({2 * n})', orthogonal(2 * n), unitary(n), np.eye(n, dtype=np.int64))


def symplectic_in_orthogonal(m: int) -> TorusEmbedding:
    return compose(unitary_in_orthogonal(2 * m), symplectic_in_unitary(m))


def rotation_block(n: int, family: GroupFamily = GroupFamily.O) -> TorusEmbedding:
    """ O(2) x O(n-2) < O(n), or its SO version; a rank-0 factor for n-2 = 1 is dropped.
    """

    if n < 3:
        raise DomainError(message='rotation block needs n >= 3', n=n)
    label = orthogonal if family == GroupFamily.O else special_orthogonal
    factors = [label(2)] + ([label(n - 2)] if n - 2 >= 2 else [])
    sub = make_group(factors)
    ambient = label(n)
    return TorusEmbedding(f'{sub}<{ambient}', ambient, sub, np.eye(n // 2, dtype=np.int64))


def quaternionic_line(m: int) -> TorusEmbedding:
    sub = make_group([symplectic(1)] + ([symplectic(m - 1)] if m > 1 else []))
    return TorusEmbedding(f'{sub}<Sp({m})', symplectic(m), sub, np.eye(m, dtype=np.int64))


def complex_line_in_symplectic(m: int) -> TorusEmbedding:
    sub = make_group([unitary(1)] + ([symplectic(m - 1)] if m > 1 else []))
    return TorusEmbedding(f'{sub}<Sp({m})', symplectic(m), sub, np.eye(m, dtype=np.int64))


def diagonal_torus_in_su2() -> TorusEmbedding:
    return TorusEmbedding('U(1)<SU2', su2(), unitary(1), np.eye(1, dtype=np.int64))


def levi_diagonal(p: int, q: int) -> TorusEmbedding:
    """ U(1)_diag x U(p-1) x U(q-1) < U(p) x U(q), the first coordinates of both factors equal.
    """

    factors = [unitary(1)] + ([unitary(p - 1)] if p > 1 else []) + ([unitary(q - 1)] if q > 1 else [])
    sub = make_group(factors)
    matrix = np.zeros((p + q, sub.rank), dtype=np.int64)
    matrix[0, 0] = 1
    matrix[p, 0] = 1
    for i in range(1, p):
        matrix[i, i] = 1
    for j in range(1, q):
        matrix[p + j, (p - 1) + j] = 1
    ambient = make_group([unitary(p), unitary(q)])
    return TorusEmbedding(f'{sub}<{ambient}', ambient, sub, matrix)
