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

from typing import Dict, Mapping, Sequence, Tuple

from sympy.polys.rings import PolyElement

from koszullift.kernel.datatypes.enumerations import Over
from koszullift.kernel.datatypes.gradedring import GradedRing
from koszullift.kernel.datatypes.polymatrix import PolyMatrix
from koszullift.kernel.exceptions import WindowError


class FreeComplex:
    def __init__(self,
                 ring: GradedRing,
                 over: Over,
                 window: Tuple[int, int],
                 twists: Mapping[int, Sequence[int]],
                 diffs: Mapping[int, PolyMatrix] = None,
                 bounded_below: bool = False,
                 bounded_above: bool = False,
                 lift: bool = False,
                 caveat: str = None):
        """
        A window [lo, hi] of a graded complex of free modules F_n = (+) Q(-a) or R(-a)

        :param ring: ring carrying Q, J and the sequence f
        :param over: Over.Q or Over.R
        :param window: homological range (lo, hi)
        :param twists: n -> generator degrees of F_n, for every n in the window
        :param diffs: n -> matrix of d_n: F_n -> F_{n-1} for lo < n <= hi; missing maps are zero
        :param bounded_below: the complex is zero below lo
        :param bounded_above: the complex is zero above hi
        :param lift: a Q-lift whose square only vanishes modulo (f)
        :param caveat: free text carried into reports, e.g. a degree bound
        """
        lo, hi = int(window[0]), int(window[1])
        if lo > hi:
            raise ValueError('Empty window [%d, %d]' % (lo, hi))
        if set(twists.keys()) != set(range(lo, hi + 1)):
            raise ValueError('Twists must be given for every degree in [%d, %d], got %s'
                             % (lo, hi, sorted(twists.keys())))
        if lift and over is not Over.Q:
            raise ValueError('A lift lives over Q')

        self._ring = ring
        self._over = over
        self._window = (lo, hi)
        self._twists = {n: tuple(int(a) for a in twists[n]) for n in range(lo, hi + 1)}
        self._bounded_below = bool(bounded_below)
        self._bounded_above = bool(bounded_above)
        self._lift = bool(lift)
        self._caveat = caveat

        diffs = dict(diffs or {})
        unexpected = set(diffs.keys()) - set(range(lo + 1, hi + 1))
        if unexpected:
            raise ValueError('Differentials outside the window: %s' % sorted(unexpected))
        self._diffs = {}
        for n in range(lo + 1, hi + 1):
            shape = (self.rank(n - 1), self.rank(n))
            matrix = diffs.get(n)
            if matrix is None:
                matrix = PolyMatrix.zeros(ring, *shape)
            if matrix.shape != shape:
                raise ValueError('d_%d has shape %s, expected %s' % (n, matrix.shape, shape))
            self._diffs[n] = matrix

    @property
    def ring(self) -> GradedRing:
        return self._ring

    @property
    def over(self) -> Over:
        return self._over

    @property
    def window(self) -> Tuple[int, int]:
        return self._window

    @property
    def lo(self) -> int:
        return self._window[0]

    @property
    def hi(self) -> int:
        return self._window[1]

    @property
    def bounded_below(self) -> bool:
        return self._bounded_below

    @property
    def bounded_above(self) -> bool:
        return self._bounded_above

    @property
    def is_lift(self) -> bool:
        return self._lift

    @property
    def caveat(self) -> str:
        return self._caveat

    @property
    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def has_module(self, n: int) -> bool:
        """
        :param n: homological degree
        :return: True when F_n is known: inside the window, or outside on a bounded side
        """
        if self.lo <= n <= self.hi:
            return True
        return (n < self.lo and self._bounded_below) or (n > self.hi and self._bounded_above)

    def twists(self, n: int) -> Tuple[int, ...]:
        if self.lo <= n <= self.hi:
            return self._twists[n]
        if self.has_module(n):
            return ()
        raise WindowError('F_%d lies outside the window [%d, %d]' % (n, self.lo, self.hi))

    def rank(self, n: int) -> int:
        return len(self.twists(n))

    def ranks(self) -> Dict[int, int]:
        return {n: self.rank(n) for n in self.degrees}

    def total_rank(self) -> int:
        return sum(self.ranks().values())

    def has_differential(self, n: int) -> bool:
        return self.has_module(n) and self.has_module(n - 1)

    def differential(self, n: int) -> PolyMatrix:
        if n in self._diffs:
            return self._diffs[n]
        if self.has_differential(n):
            return PolyMatrix.zeros(self._ring, self.rank(n - 1), self.rank(n))
        raise WindowError('d_%d is not available on the window [%d, %d]' % (n, self.lo, self.hi))

    @property
    def differentials(self) -> Dict[int, PolyMatrix]:
        return dict(self._diffs)

    def _copy(self, **changes) -> 'FreeComplex':
        arguments = dict(ring=self._ring, over=self._over, window=self._window, twists=self._twists,
                         diffs=self._diffs, bounded_below=self._bounded_below,
                         bounded_above=self._bounded_above, lift=self._lift, caveat=self._caveat)
        arguments.update(changes)
        return FreeComplex(**arguments)

    def with_over(self, over: Over, lift: bool = False) -> 'FreeComplex':
        return self._copy(over=over, lift=lift)

    def with_differential(self, n: int, matrix: PolyMatrix) -> 'FreeComplex':
        diffs = dict(self._diffs)
        diffs[n] = matrix
        return self._copy(diffs=diffs)

    def with_entry(self, n: int, i: int, j: int, value: PolyElement) -> 'FreeComplex':
        return self.with_differential(n, self.differential(n).with_entry(i, j, value))

    def map_entries(self, func) -> 'FreeComplex':
        return self._copy(diffs={n: m.map(func) for n, m in self._diffs.items()})

    def permuted(self, orders: Mapping[int, Sequence[int]]) -> 'FreeComplex':
        """
        Reorder generators; orders[n][k] is the old position of the new k-th generator of F_n
        :param orders: n -> permutation, identity where missing
        :return: FreeComplex
        """
        order = {n: list(orders.get(n, range(self.rank(n)))) for n in self.degrees}
        for n, perm in order.items():
            if sorted(perm) != list(range(self.rank(n))):
                raise ValueError('Not a permutation of the generators of F_%d: %s' % (n, perm))
        twists = {n: [self._twists[n][k] for k in order[n]] for n in self.degrees}
        diffs = {n: m.permuted(order[n - 1], order[n]) for n, m in self._diffs.items()}
        return self._copy(twists=twists, diffs=diffs)

    def __eq__(self, other):
        if not isinstance(other, FreeComplex):
            return NotImplemented
        return (self._over == other.over and self._window == other.window
                and all(self._twists[n] == other.twists(n) for n in self.degrees)
                and self._diffs == other.differentials
                and (self._bounded_below, self._bounded_above) == (other.bounded_below, other.bounded_above))

    def __str__(self):
        return 'FreeComplex(over %s, window [%d, %d], ranks %s)' % (self._over.value, self.lo, self.hi,
                                                                   [self.rank(n) for n in self.degrees])

    def __repr__(self):
        return str(self)
