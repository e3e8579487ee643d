###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional

from ..oops import DomainError
from ..utils.constants import Status

__all__ = ['Report', 'ReportSet']


@dataclass
class Report(object):
    """ Outcome of one verification claim on one parameter cell.

    A ``fail`` carries a witness, a ``skipped`` carries a reason.
    """

    claim: str
    params: Dict[str, Any]
    status: Status
    witness: Optional[Dict[str, Any]] = None
    reason: Optional[str] = None
    millis: int = 0
    notes: Optional[Dict[str, Any]] = field(default=None)

    def __post_init__(self):
        self.status = Status(str(self.status))
        if self.status is Status.FAIL and not self.witness:
            raise DomainError(message='a failed report needs a witness', claim=self.claim)
        if self.status is Status.SKIPPED and not self.reason:
            raise DomainError(message='a skipped report needs a reason', claim=self.claim)

    @classmethod
    def passed(cls, claim: str, params: Dict, notes: Optional[Dict] = None) -> 'Report':
        return cls(claim, params, Status.PASS, notes=notes)

    @classmethod
    def failed(cls, claim: str, params: Dict, witness: Dict, notes: Optional[Dict] = None) -> 'Report':
        return cls(claim, params, Status.FAIL, witness=witness, notes=notes)

    @classmethod
    def skipped(cls, claim: str, params: Dict, reason: str, notes: Optional[Dict] = None) -> 'Report':
        return cls(claim, params, Status.SKIPPED, reason=reason, notes=notes)

    def sort_key(self):
        return (self.claim, json.dumps(self.params, sort_keys=True))

    def to_dict(self, timing: bool = False) -> Dict:
        dict_ = {'claim': self.claim, 'params': self.params, 'status': str(self.status)}
        if self.witness is not None:
            dict_['witness'] = self.witness
        if self.reason is not None:
            dict_['reason'] = self.reason
        if self.notes:
            dict_['notes'] = self.notes
        dict_['millis'] = int(self.millis) if timing else 0
        return dict_

    @classmethod
    def from_dict(cls, dict_: Dict) -> 'Report':
        return cls(dict_['claim'], dict_.get('params', {}), Status(dict_['status']), witness=dict_.get('witness'),
                   reason=dict_.get('reason'), millis=dict_.get('millis', 0), notes=dict_.get('notes'))

    def __str__(self):
        params = ' '.join(f'{key}={value}' for key, value in sorted(self.params.items()))
        line = f'{str(self.status).upper():7} {self.claim} {params}'.rstrip()
        if self.status is Status.FAIL:
            line += f' witness={json.dumps(self.witness, sort_keys=True)}'
        if self.status is Status.SKIPPED:
            line += f' reason={self.reason}'
        return line


class ReportSet(object):
    """ Reports ordered by claim id and parameters, whatever order they were produced in.
    """

    def __init__(self, reports: Optional[List[Report]] = None):
        self._reports = sorted(reports or [], key=lambda r: r.sort_key())

    @classmethod
    def build(cls, reports: List[Report]) -> 'ReportSet':
        return cls(list(reports))

    def counts(self) -> Dict[str, int]:
        counts = {str(status): 0 for status in Status}
        for report in self._reports:
            counts[str(report.status)] += 1
        return counts

    def with_status(self, status) -> 'ReportSet':
        status = Status(str(status))
        return ReportSet([r for r in self._reports if r.status is status])

    def failures(self) -> List[Report]:
        return list(self.with_status(Status.FAIL))

    @property
    def has_failures(self) -> bool:
        return any(r.status is Status.FAIL for r in self._reports)

    def to_list(self, timing: bool = False) -> List[Dict]:
        return [r.to_dict(timing) for r in self._reports]

    def __getitem__(self, index: int) -> Report:
        return self._reports[index]

    def __iter__(self) -> Iterator[Report]:
        return iter(self._reports)

    def __len__(self) -> int:
        return len(self._reports)

    def __add__(self, other: 'ReportSet') -> 'ReportSet':
        if not isinstance(other, ReportSet):
            raise ValueError(f'Cannot merge a report set with {type(other)}')
        return ReportSet(self._reports + other._reports)
