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

from typing import Iterator, List, Mapping, Tuple

from sympy.polys.rings import PolyElement

from koszullift.kernel.datatypes.freecomplex import FreeComplex
from koszullift.kernel.datatypes.koszulindex import KoszulIndex
from koszullift.kernel.datatypes.polymatrix import PolyMatrix
from koszullift.kernel.exceptions import WindowError


class HomotopyFamily:
    def __init__(self,
                 base: FreeComplex,
                 maps: Mapping[KoszulIndex, Mapping[int, PolyMatrix]],
                 level: int):
        """
        The maps t^alpha_n: F_n -> F_{n-|alpha|-1} for every basis element alpha with 2 <= |alpha|+1 <= level+1.
        t^0 is the identity and t^1 the differential of the base; neither is stored.

        :param base: the lift F over Q
        :param maps: alpha -> (n -> matrix), with 1 <= |alpha| <= level
        :param level: the largest |alpha| that has been solved
        """
        if level < 0 or level > base.ring.codimension:
            raise ValueError('Level %d outside 0..%d' % (level, base.ring.codimension))
        stored = {}
        for alpha, positions in maps.items():
            if alpha.degree < 1 or alpha.degree > level:
                raise ValueError('t^%s does not belong to a family of level %d' % (alpha, level))
            for n, matrix in positions.items():
                shape = (base.rank(n - alpha.degree - 1), base.rank(n))
                if matrix.shape != shape:
                    raise ValueError('t^%s_%d has shape %s, expected %s' % (alpha, n, matrix.shape, shape))
            stored[alpha] = dict(positions)
        self._base = base
        self._maps = stored
        self._level = level

    @property
    def base(self) -> FreeComplex:
        return self._base

    @property
    def ring(self):
        return self._base.ring

    @property
    def level(self) -> int:
        return self._level

    @property
    def indices(self) -> List[KoszulIndex]:
        return sorted(self._maps.keys())

    def positions(self, alpha: KoszulIndex) -> List[int]:
        return sorted(self._maps.get(alpha, {}).keys())

    def target(self, alpha: KoszulIndex, n: int) -> int:
        return n - alpha.degree - 1

    def has_map(self, alpha: KoszulIndex, n: int) -> bool:
        if alpha.degree > self._level:
            return False
        if n in self._maps.get(alpha, {}):
            return True
        return self._base.has_module(n) and self._base.has_module(self.target(alpha, n))

    def map(self, alpha: KoszulIndex, n: int) -> PolyMatrix:
        """
        :param alpha: basis element, ZERO for the identity and ONE for the differential
        :param n: source homological degree
        :return: the matrix of t^alpha_n
        """
        if alpha.is_zero:
            return PolyMatrix.identity(self.ring, self._base.rank(n))
        if alpha.is_one:
            return self._base.differential(n)
        if alpha.degree > self._level:
            raise WindowError('t^%s is above the solved level %d' % (alpha, self._level))
        positions = self._maps.get(alpha, {})
        if n in positions:
            return positions[n]
        if self.has_map(alpha, n):
            return PolyMatrix.zeros(self.ring, self._base.rank(self.target(alpha, n)), self._base.rank(n))
        raise WindowError('t^%s_%d leaves the window [%d, %d]' % (alpha, n, self._base.lo, self._base.hi))

    def entry_degree(self, alpha: KoszulIndex, n: int, row: int, col: int) -> int:
        """
        Forced internal degree of an entry of t^alpha_n
        :return: source twist - target twist - sum of the degrees of f_i, i in alpha
        """
        shift = sum(self.ring.sequence_degrees[i - 1] for i in alpha) if not alpha.is_zero else 0
        return self._base.twists(n)[col] - self._base.twists(self.target(alpha, n))[row] - shift

    def items(self) -> Iterator[Tuple[KoszulIndex, int, PolyMatrix]]:
        for alpha in self.indices:
            for n in self.positions(alpha):
                yield alpha, n, self._maps[alpha][n]

    def with_entry(self, alpha: KoszulIndex, n: int, row: int, col: int, value: PolyElement) -> 'HomotopyFamily':
        maps = {a: dict(p) for a, p in self._maps.items()}
        maps.setdefault(alpha, {})[n] = self.map(alpha, n).with_entry(row, col, value)
        return HomotopyFamily(self._base, maps, self._level)

    def with_base(self, base: FreeComplex) -> 'HomotopyFamily':
        return HomotopyFamily(base, self._maps, self._level)

    def is_trivial(self) -> bool:
        """
        :return: True when every stored higher homotopy vanishes
        """
        return all(matrix.is_zero() for _, _, matrix in self.items())

    def __eq__(self, other):
        if not isinstance(other, HomotopyFamily):
            return NotImplemented
        return self._level == other.level and self._maps == {a: dict((n, other.map(a, n)) for n in other.positions(a))
                                                             for a in other.indices}

    def __repr__(self):
        return 'HomotopyFamily(level=%d, indices=%s)' % (self._level, [str(a) for a in self.indices])
