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

from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement

from koszullift.kernel.datatypes.gradedring import GradedRing


class PolyMatrix:
    def __init__(self,
                 ring: GradedRing,
                 rows: Sequence[Sequence[PolyElement]],
                 shape: Tuple[int, int] = None):
        """
        Immutable matrix over Q = P/J; entries are kept J-reduced

        :param ring: the ambient graded ring
        :param rows: list of rows, each a list of polynomials
        :param shape: (rows, columns); required when there are no rows
        """
        rows = tuple(tuple(ring.reduce(p) for p in row) for row in rows)
        if shape is None:
            if len(rows) == 0:
                raise ValueError('shape is required for a matrix without rows')
            shape = (len(rows), len(rows[0]))
        if len(rows) != shape[0] or any(len(row) != shape[1] for row in rows):
            raise ValueError('Rows do not match the shape %s' % (shape,))
        self._ring = ring
        self._rows = rows
        self._shape = (int(shape[0]), int(shape[1]))

    @classmethod
    def zeros(cls, ring: GradedRing, nrows: int, ncols: int):
        return cls(ring, [[ring.zero] * ncols for _ in range(nrows)], (nrows, ncols))

    @classmethod
    def identity(cls, ring: GradedRing, n: int):
        return cls.scalar(ring, n, ring.one)

    @classmethod
    def scalar(cls, ring: GradedRing, n: int, value: PolyElement):
        return cls(ring, [[value if i == j else ring.zero for j in range(n)] for i in range(n)], (n, n))

    @classmethod
    def from_blocks(cls,
                    ring: GradedRing,
                    row_sizes: Sequence[int],
                    col_sizes: Sequence[int],
                    blocks: Dict[Tuple[int, int], 'PolyMatrix']):
        """
        Assemble a matrix from a sparse map of blocks; missing blocks are zero
        :param ring:
        :param row_sizes: sizes of the row blocks, in order
        :param col_sizes: sizes of the column blocks, in order
        :param blocks: (row block, column block) -> PolyMatrix
        :return: PolyMatrix
        """
        row_offsets = [sum(row_sizes[:i]) for i in range(len(row_sizes))]
        col_offsets = [sum(col_sizes[:j]) for j in range(len(col_sizes))]
        rows = [[ring.zero] * sum(col_sizes) for _ in range(sum(row_sizes))]
        for (bi, bj), block in blocks.items():
            if block.shape != (row_sizes[bi], col_sizes[bj]):
                raise ValueError('Block %s has shape %s, expected %s' % ((bi, bj), block.shape,
                                                                        (row_sizes[bi], col_sizes[bj])))
            for i, j, p in block.entries():
                rows[row_offsets[bi] + i][col_offsets[bj] + j] += p
        return cls(ring, rows, (sum(row_sizes), sum(col_sizes)))

    @property
    def ring(self) -> GradedRing:
        return self._ring

    @property
    def shape(self) -> Tuple[int, int]:
        return self._shape

    @property
    def nrows(self) -> int:
        return self._shape[0]

    @property
    def ncols(self) -> int:
        return self._shape[1]

    @property
    def rows(self) -> Tuple[Tuple[PolyElement, ...], ...]:
        return self._rows

    def column(self, j: int) -> Tuple[PolyElement, ...]:
        return tuple(row[j] for row in self._rows)

    def __getitem__(self, index: Tuple[int, int]) -> PolyElement:
        i, j = index
        return self._rows[i][j]

    def entries(self) -> Iterator[Tuple[int, int, PolyElement]]:
        """
        Iterate over the nonzero entries in row-major order
        """
        for i, row in enumerate(self._rows):
            for j, p in enumerate(row):
                if p:
                    yield i, j, p

    def is_zero(self) -> bool:
        return self.first_nonzero() is None

    def first_nonzero(self) -> Optional[Tuple[int, int]]:
        for i, j, _ in self.entries():
            return i, j
        return None

    def map(self, func: Callable[[PolyElement], PolyElement]) -> 'PolyMatrix':
        return PolyMatrix(self._ring, [[func(p) for p in row] for row in self._rows], self._shape)

    def scaled(self, factor: PolyElement) -> 'PolyMatrix':
        return self.map(lambda p: p * factor)

    def with_entry(self, i: int, j: int, value: PolyElement) -> 'PolyMatrix':
        rows = [list(row) for row in self._rows]
        rows[i][j] = value
        return PolyMatrix(self._ring, rows, self._shape)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> 'PolyMatrix':
        return PolyMatrix(self._ring, [[self._rows[i][j] for j in cols] for i in rows], (len(rows), len(cols)))

    def permuted(self, row_order: Sequence[int], col_order: Sequence[int]) -> 'PolyMatrix':
        return self.submatrix(row_order, col_order)

    def _check_same_shape(self, other: 'PolyMatrix'):
        if self._shape != other.shape:
            raise ValueError('Shape mismatch: %s vs %s' % (self._shape, other.shape))

    def __add__(self, other: 'PolyMatrix') -> 'PolyMatrix':
        self._check_same_shape(other)
        return PolyMatrix(self._ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other.rows)],
                          self._shape)

    def __sub__(self, other: 'PolyMatrix') -> 'PolyMatrix':
        self._check_same_shape(other)
        return PolyMatrix(self._ring, [[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other.rows)],
                          self._shape)

    def __neg__(self) -> 'PolyMatrix':
        return self.map(lambda p: -p)

    def __matmul__(self, other: 'PolyMatrix') -> 'PolyMatrix':
        if self.ncols != other.nrows:
            raise ValueError('Cannot compose %s with %s' % (self._shape, other.shape))
        zero = self._ring.zero
        columns = [other.column(j) for j in range(other.ncols)]
        rows = []
        for row in self._rows:
            rows.append([sum((a * b for a, b in zip(row, col) if a and b), zero) for col in columns])
        return PolyMatrix(self._ring, rows, (self.nrows, other.ncols))

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self._shape == other.shape and self._rows == other.rows

    def __hash__(self):
        return hash((self._shape, tuple(tuple(sorted(p.items())) for row in self._rows for p in row)))

    def to_lists(self) -> List[List[PolyElement]]:
        return [list(row) for row in self._rows]

    def __repr__(self):
        return 'PolyMatrix(%s, %s)' % (self._shape, [[str(p) for p in row] for row in self._rows])
