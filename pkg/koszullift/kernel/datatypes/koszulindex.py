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

from itertools import combinations
from typing import Iterable, Iterator, List, NamedTuple, Optional, Tuple


class KoszulIndex:
    """
    An element of the basis of the exterior algebra on e_1..e_c together with 0.
    The empty subset is the unit 1; ZERO is the distinguished element 0 of degree -1.
    """
    __slots__ = ('_subset', '_zero')

    def __init__(self, subset: Iterable[int] = (), zero: bool = False):
        subset = tuple(subset)
        if zero and subset:
            raise ValueError('ZERO carries no subset')
        for i in subset:
            if not isinstance(i, int) or i < 1:
                raise ValueError('Koszul indices are positive integers, got %r' % (i,))
        if any(a >= b for a, b in zip(subset, subset[1:])):
            raise ValueError('Koszul indices must be strictly increasing, got %s' % (subset,))
        self._subset = subset
        self._zero = zero

    @classmethod
    def of(cls, *indices: int) -> 'KoszulIndex':
        return cls(sorted(indices))

    @classmethod
    def basis(cls, c: int, degree: Optional[int] = None) -> List['KoszulIndex']:
        """
        Basis elements e_{i_1}^...^e_{i_j} in sorted-subset order
        :param c: number of exterior generators
        :param degree: restrict to |alpha| = degree, otherwise all degrees 0..c
        :return: list of KoszulIndex
        """
        degrees = range(c + 1) if degree is None else [degree]
        return [cls(s) for j in degrees if 0 <= j <= c for s in combinations(range(1, c + 1), j)]

    @classmethod
    def from_json(cls, value: Optional[List[int]]) -> 'KoszulIndex':
        if value is None:
            return ZERO
        return cls(value)

    @property
    def subset(self) -> Tuple[int, ...]:
        return self._subset

    @property
    def is_zero(self) -> bool:
        return self._zero

    @property
    def is_one(self) -> bool:
        return not self._zero and len(self._subset) == 0

    @property
    def degree(self) -> int:
        return -1 if self._zero else len(self._subset)

    def without(self, i: int) -> 'KoszulIndex':
        return KoszulIndex(j for j in self._subset if j != i)

    def disjoint(self, other: 'KoszulIndex') -> bool:
        return not set(self._subset) & set(other.subset)

    def to_json(self) -> Optional[List[int]]:
        return None if self._zero else list(self._subset)

    def __contains__(self, i: int) -> bool:
        return i in self._subset

    def __iter__(self) -> Iterator[int]:
        return iter(self._subset)

    def _key(self):
        return self.degree, self._subset

    def __eq__(self, other):
        if not isinstance(other, KoszulIndex):
            return NotImplemented
        return self._zero == other.is_zero and self._subset == other.subset

    def __lt__(self, other: 'KoszulIndex') -> bool:
        return self._key() < other._key()

    def __hash__(self):
        return hash((self._zero, self._subset))

    def __str__(self):
        if self._zero:
            return '0'
        if not self._subset:
            return '1'
        return '^'.join('e%d' % i for i in self._subset)

    def __repr__(self):
        return 'KoszulIndex(%s)' % self


ZERO = KoszulIndex(zero=True)
ONE = KoszulIndex()


class SignedIndex(NamedTuple):
    index: KoszulIndex
    sign: int
