###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

from typing import Dict, Optional

__all__ = ['BranchkitError', 'DomainError', 'RoutedError', 'ResourceLimitError',
           'NotACharacterError', 'ExactDivisionError', 'NoKTypeOracleError']


class BranchkitError(Exception):
    """ Root of every error raised by branchkit.

    Errors are built from a free message plus keyword details, e.g.
    ``DomainError(message='weight is not dominant', group='U(3)', weight=(0, 1, 0))``.
    """

    def __init__(self, *args, message: Optional[str] = None, **kwargs):
        if message is None and args:
            message = ' '.join(str(a) for a in args)
        self.message = message or ''
        self.details: Dict = dict(kwargs)
        if self.details:
            super().__init__(self.message, self.details)
        else:
            super().__init__(self.message)

    def __str__(self):
        if not self.details:
            return self.message
        details = ', '.join(f'{key}={value}' for key, value in sorted(self.details.items()))
        return f'{self.message} ({details})'


class DomainError(BranchkitError):
    """ A precondition on a group, weight, label or request does not hold.
    """


class RoutedError(DomainError):
    """ The request is valid mathematics but belongs to another constructor.
    """

    def __init__(self, *args, route: str, **kwargs):
        super().__init__(*args, route=route, **kwargs)
        self.route = route


class ResourceLimitError(BranchkitError):
    """ Rank cap or degree budget exceeded.
    """


class NotACharacterError(BranchkitError):
    """ A Laurent polynomial is not a non-negative combination of irreducible characters.
    """


class ExactDivisionError(BranchkitError):
    """ Division by a Weyl denominator factor left a non-zero remainder.
    """


class NoKTypeOracleError(BranchkitError):
    """ No K-type oracle exists for a spectrum component.
    """
