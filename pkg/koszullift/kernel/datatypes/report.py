# Copyright (c) 2026, The KoszulLift Developers
# All rights reserved.
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#
# * Redistributions of source code must retain the above copyright notice, this
# list of conditions and the following disclaimer.
#
# * Redistributions in binary form must reproduce the above copyright notice,
# this list of conditions and the following disclaimer in the documentation
# and/or other materials provided with the distribution.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
# FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
# DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
# SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
# CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
# OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
# OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.

from typing import Any, Dict, Iterable, List, Optional

from koszullift.kernel.datatypes.enumerations import Outcome


class CheckReport:
    def __init__(self,
                 name: str,
                 outcome: Outcome = None,
                 location: Dict[str, Any] = None,
                 detail: str = None,
                 children: List['CheckReport'] = None,
                 data: Dict[str, Any] = None):
        """
        Outcome of one check, or of a group of checks when children are given

        :param name: check identifier, e.g. 'check_complex'
        :param outcome: PASS or FAIL; derived from the children when omitted
        :param location: where the first failure sits, e.g. {'n': 2, 'row': 0, 'col': 1}
        :param detail: human readable explanation of a failure
        :param children: nested reports
        :param data: additional values worth reporting (ranks, dimensions, verdicts)
        """
        self._name = name
        self._children = list(children or [])
        if outcome is None:
            outcome = Outcome.PASS if all(c.passed for c in self._children) else Outcome.FAIL
        self._outcome = outcome
        self._location = location
        self._detail = detail
        self._data = dict(data or {})

    @classmethod
    def passing(cls, name: str, data: Dict[str, Any] = None) -> 'CheckReport':
        return cls(name, Outcome.PASS, data=data)

    @classmethod
    def failing(cls, name: str, detail: str, location: Dict[str, Any] = None,
                data: Dict[str, Any] = None) -> 'CheckReport':
        return cls(name, Outcome.FAIL, location=location, detail=detail, data=data)

    @classmethod
    def aggregate(cls, name: str, children: Iterable['CheckReport'], data: Dict[str, Any] = None) -> 'CheckReport':
        return cls(name, children=list(children), data=data)

    @property
    def name(self) -> str:
        return self._name

    @property
    def outcome(self) -> Outcome:
        return self._outcome

    @property
    def passed(self) -> bool:
        return self._outcome is Outcome.PASS

    @property
    def location(self) -> Optional[Dict[str, Any]]:
        return self._location

    @property
    def detail(self) -> Optional[str]:
        return self._detail

    @property
    def children(self) -> List['CheckReport']:
        return list(self._children)

    @property
    def data(self) -> Dict[str, Any]:
        return dict(self._data)

    def first_failure(self) -> Optional['CheckReport']:
        """
        Depth-first search for the innermost failing report
        """
        if self.passed:
            return None
        for child in self._children:
            failure = child.first_failure()
            if failure is not None:
                return failure
        return self

    def __bool__(self):
        return self.passed

    def __str__(self):
        text = '%s: %s' % (self._name, self._outcome.value)
        if self._location:
            text += ' at ' + ', '.join('%s=%s' % (k, v) for k, v in sorted(self._location.items()))
        if self._detail:
            text += ' (' + self._detail + ')'
        return text

    def __repr__(self):
        return 'CheckReport(' + ', '.join(map(str, [self._name, self._outcome.value, self._location,
                                                   len(self._children)])) + ')'
