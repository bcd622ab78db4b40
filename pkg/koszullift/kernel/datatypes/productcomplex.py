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

from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from koszullift.kernel.datatypes.freecomplex import FreeComplex
from koszullift.kernel.datatypes.homotopyfamily import HomotopyFamily
from koszullift.kernel.datatypes.koszulindex import KoszulIndex
from koszullift.kernel.datatypes.polymatrix import PolyMatrix


class Block(NamedTuple):
    """F_p (x) alpha inside (F (x) K)_n, occupying generator positions start..stop-1"""
    j: int
    alpha: KoszulIndex
    p: int
    start: int
    stop: int

    @property
    def size(self) -> int:
        return self.stop - self.start


class ProductComplex:
    def __init__(self,
                 complex: FreeComplex,
                 blocks: Dict[int, List[Block]],
                 provenance: Dict[Tuple[int, int, int], Tuple[str, ...]],
                 family: Optional[HomotopyFamily] = None):
        """
        The assembled complex (F (x)_Q K, d) with its block bookkeeping

        :param complex: the underlying complex over Q
        :param blocks: n -> blocks of (F (x) K)_n in generator order
        :param provenance: (n, source block, target block) -> labels of the terms adding into that block of d_n
        :param family: the homotopies it was assembled from
        """
        self._complex = complex
        self._blocks = {n: list(b) for n, b in blocks.items()}
        self._provenance = dict(provenance)
        self._family = family

    @property
    def complex(self) -> FreeComplex:
        return self._complex

    @property
    def family(self) -> Optional[HomotopyFamily]:
        return self._family

    @property
    def codimension(self) -> int:
        return self._complex.ring.codimension

    @property
    def window(self) -> Tuple[int, int]:
        return self._complex.window

    @property
    def provenance(self) -> Dict[Tuple[int, int, int], Tuple[str, ...]]:
        return dict(self._provenance)

    def differential(self, n: int) -> PolyMatrix:
        return self._complex.differential(n)

    def rank(self, n: int) -> int:
        return self._complex.rank(n)

    def blocks(self, n: int) -> List[Block]:
        return list(self._blocks.get(n, []))

    def block(self, n: int, alpha: KoszulIndex) -> Block:
        for b in self._blocks.get(n, []):
            if b.alpha == alpha:
                return b
        raise KeyError('No block %s in degree %d' % (alpha, n))

    def k0_block(self, n: int) -> Block:
        """
        :return: the copy F_n (x) K_0 of F_n inside (F (x) K)_n
        """
        return self.block(n, KoszulIndex())

    def display_permutation(self, n: int) -> List[int]:
        """
        Generator order with Koszul degree descending, the way block matrices of small examples are usually printed
        :param n: homological degree
        :return: list of canonical positions, in display order
        """
        order = []
        for b in sorted(self._blocks.get(n, []), key=lambda b: (-b.j, b.alpha.subset)):
            order.extend(range(b.start, b.stop))
        return order

    def displayed(self) -> FreeComplex:
        return self._complex.permuted({n: self.display_permutation(n) for n in self._complex.degrees})

    def to_canonical(self, n: int, matrix: PolyMatrix) -> PolyMatrix:
        """
        Translate a matrix of d_n given in display order into canonical order
        :param n: homological degree of the source
        :param matrix: display order matrix P_n -> P_{n-1}
        :return: PolyMatrix in canonical generator order
        """
        return matrix.permuted(_inverse(self.display_permutation(n - 1)), _inverse(self.display_permutation(n)))

    def __repr__(self):
        return 'ProductComplex(c=%d, %s)' % (self.codimension, self._complex)


def _inverse(permutation: Sequence[int]) -> List[int]:
    inverse = [0] * len(permutation)
    for new, old in enumerate(permutation):
        inverse[old] = new
    return inverse
