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

from typing import Dict, List, Tuple

from koszullift.kernel.datatypes.enumerations import Over
from koszullift.kernel.datatypes.freecomplex import FreeComplex
from koszullift.kernel.datatypes.gradedring import GradedRing
from koszullift.kernel.datatypes.polymatrix import PolyMatrix
from koszullift.kernel.datatypes.subtypes import Presentation
from koszullift.processor.preprocessor.parser import complex_from_lists, matrix_from_lists

# the worked hypersurface example, under its command line name and a descriptive alias
EXAMPLE_NAMES = ('paper-5-2', 'hypersurface')

# Q = k[x,y]/(x^2), f = y^2, so R = k[x,y]/(x^2,y^2)
HYPERSURFACE_WINDOW_TWISTS = {-2: [0, 0], -1: [1], 0: [3], 1: [4, 4], 2: [5, 5, 5]}
HYPERSURFACE_WINDOW_DIFFS = {
    -1: [['x'], ['y']],
    0: [['x*y']],
    1: [['x', 'y']],
    2: [['x', '0', '-y'], ['0', 'y', 'x']],
}

# t^e_n: F_n -> F_{n-2} under zero-normalization
EXPECTED_T_E = {
    2: [['0', '-1', '0']],
    1: [['0', '-x']],
    0: [['0'], ['-x']],
}

# d_m of the product complex in display order (K_1 summand first): rows, row block sizes, column block sizes
EXPECTED_DISPLAY = {
    2: ([['x', 'y', '0', '-1', '0'],
         ['-y^2', '0', 'x', '0', '-y'],
         ['0', '-y^2', '0', 'y', 'x']], [1, 2], [2, 3]),
    1: ([['x*y', '0', 'x'],
         ['y^2', 'x', 'y']], [1, 1], [1, 2]),
    0: ([['x', '0'],
         ['y', '-x'],
         ['-y^2', 'x*y']], [2, 1], [1, 1]),
}

EXPECTED_WINDOW = (-1, 2)

# the display order of the example equals the canonical order moved by the K_1-first permutation with no shift in n
DISPLAY_PARITY_OFFSET = 0


def hypersurface_ring(characteristic: int = 0) -> GradedRing:
    return GradedRing(['x', 'y'], characteristic, [(2, 0)], [{(0, 2): 1}])


def hypersurface_complex(ring: GradedRing = None) -> FreeComplex:
    """
    Window [-2, 2] of a two sided complex over k[x,y]/(x^2,y^2), neither side bounded
    """
    ring = ring or hypersurface_ring()
    return complex_from_lists(ring, Over.R, (-2, 2), HYPERSURFACE_WINDOW_TWISTS, HYPERSURFACE_WINDOW_DIFFS)


def expected_homotopy(ring: GradedRing) -> Dict[int, PolyMatrix]:
    return {n: matrix_from_lists(ring, rows) for n, rows in EXPECTED_T_E.items()}


def expected_display(ring: GradedRing) -> Dict[int, Tuple[PolyMatrix, List[int], List[int]]]:
    return {m: (matrix_from_lists(ring, rows), row_sizes, col_sizes)
            for m, (rows, row_sizes, col_sizes) in EXPECTED_DISPLAY.items()}


def expected_epsilon_display(ring: GradedRing, C: FreeComplex, n: int) -> PolyMatrix:
    """
    [0 | Id]: zero on the K_1 summand, identity on the copy of C_n
    """
    k1 = C.rank(n - 1) if C.has_module(n - 1) else 0
    rows = [[ring.one if col == k1 + row else ring.zero for col in range(k1 + C.rank(n))]
            for row in range(C.rank(n))]
    return PolyMatrix(ring, rows, (C.rank(n), k1 + C.rank(n)))


def matrix_factorization_ring(characteristic: int = 0) -> GradedRing:
    return GradedRing(['u', 'v'], characteristic, [], [{(1, 1): 1}])


def matrix_factorization_complex(length: int = 5, ring: GradedRing = None) -> FreeComplex:
    """
    The periodic resolution of R/(u) over k[u,v]/(uv), differentials alternating u and v, on [0, length]
    """
    ring = ring or matrix_factorization_ring()
    twists = {n: [n] for n in range(length + 1)}
    diffs = {n: [['u' if n % 2 else 'v']] for n in range(1, length + 1)}
    return complex_from_lists(ring, Over.R, (0, length), twists, diffs, bounded_below=True)


def residue_field_ring(characteristic: int = 0) -> GradedRing:
    """
    Q = k[x,y] with f = (x^2, y^2)
    """
    return GradedRing(['x', 'y'], characteristic, [], [{(2, 0): 1}, {(0, 2): 1}])


def residue_field_presentation(ring: GradedRing = None) -> Presentation:
    ring = ring or residue_field_ring()
    return Presentation(ring, [0], matrix_from_lists(ring, [['x', 'y']]), [1, 1])


def example(name: str, characteristic: int = 0) -> Tuple[GradedRing, FreeComplex]:
    if name not in EXAMPLE_NAMES:
        raise ValueError('Unknown example %r, expected one of %s' % (name, ', '.join(EXAMPLE_NAMES)))
    ring = hypersurface_ring(characteristic)
    return ring, hypersurface_complex(ring)
