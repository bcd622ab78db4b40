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

from typing import Any, Dict, List, Sequence

from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement

from koszullift.kernel.datatypes.freecomplex import FreeComplex
from koszullift.kernel.datatypes.gradedring import GradedRing, Monomial
from koszullift.kernel.datatypes.homotopyfamily import HomotopyFamily
from koszullift.kernel.datatypes.koszulindex import KoszulIndex
from koszullift.kernel.datatypes.polymatrix import PolyMatrix
from koszullift.kernel.datatypes.productcomplex import ProductComplex


def format_monomial(monomial: Monomial, ring: GradedRing) -> str:
    factors = []
    for name, e in zip(ring.variables, monomial):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append('%s^%d' % (name, e))
    return '*'.join(factors)


def format_coefficient(value, ring: GradedRing) -> str:
    return str(ring.domain.to_sympy(value))


def format_polynomial(p: PolyElement, ring: GradedRing) -> str:
    """
    Text form in the input grammar, terms greatest first, e.g. 'x^2*y - 3*y^3'
    :param p:
    :param ring:
    :return: str
    """
    if not p:
        return '0'
    text = ''
    for monomial in sorted(p.keys(), key=grlex, reverse=True):
        coefficient = format_coefficient(p[monomial], ring)
        negative = coefficient.startswith('-')
        magnitude = coefficient.lstrip('-')
        powers = format_monomial(monomial, ring)
        if not powers:
            term = magnitude
        elif magnitude == '1':
            term = powers
        else:
            term = magnitude + '*' + powers
        if text == '':
            text = ('-' if negative else '') + term
        else:
            text += (' - ' if negative else ' + ') + term
    return text


def format_matrix(matrix: PolyMatrix) -> List[List[str]]:
    return [[format_polynomial(p, matrix.ring) for p in row] for row in matrix.rows]


def index_key(alpha: KoszulIndex) -> str:
    """
    :return: '[1,3]' for e1^e3, '[]' for 1
    """
    return '[' + ','.join(str(i) for i in alpha) + ']'


def complex_to_json(C: FreeComplex) -> Dict[str, Any]:
    result = {'over': C.over.value,
              'window': [C.lo, C.hi],
              'twists': {str(n): list(C.twists(n)) for n in C.degrees},
              'diffs': {str(n): format_matrix(m) for n, m in sorted(C.differentials.items())}}
    if C.bounded_below:
        result['bounded_below'] = True
    if C.bounded_above:
        result['bounded_above'] = True
    if C.is_lift:
        result['lift'] = True
    if C.caveat:
        result['caveat'] = C.caveat
    return result


def family_to_json(H: HomotopyFamily) -> Dict[str, Any]:
    maps = {}
    for alpha, n, matrix in H.items():
        maps.setdefault(index_key(alpha), {})[str(n)] = format_matrix(matrix)
    return {'level': H.level, 'maps': maps}


def render_matrix(matrix: PolyMatrix, row_sizes: Sequence[int] = None, col_sizes: Sequence[int] = None) -> str:
    """
    Aligned text rendering of a matrix with '|' between column blocks and a '-' rule between row blocks

    :param matrix:
    :param row_sizes: sizes of the row blocks, one block when omitted
    :param col_sizes: sizes of the column blocks, one block when omitted
    :return: multi-line str
    """
    cells = format_matrix(matrix)
    if matrix.nrows == 0 or matrix.ncols == 0:
        return '[] (%d x %d)' % matrix.shape
    row_sizes = list(row_sizes or [matrix.nrows])
    col_sizes = list(col_sizes or [matrix.ncols])
    col_breaks = {sum(col_sizes[:k]) for k in range(1, len(col_sizes)) if col_sizes[k] and sum(col_sizes[:k])}
    row_breaks = {sum(row_sizes[:k]) for k in range(1, len(row_sizes)) if row_sizes[k] and sum(row_sizes[:k])}
    widths = [max(len(cells[i][j]) for i in range(matrix.nrows)) for j in range(matrix.ncols)]

    def line(values):
        parts = []
        for j, value in enumerate(values):
            if j in col_breaks:
                parts.append('|')
            parts.append(value.rjust(widths[j]))
        return '[ ' + ' '.join(parts) + ' ]'

    lines = []
    for i, row in enumerate(cells):
        if i in row_breaks:
            lines.append(line(['-' * w for w in widths]).replace('|', '+'))
        lines.append(line(row))
    return '\n'.join(lines)


def display_block_sizes(P: ProductComplex, n: int) -> List[int]:
    return [b.size for b in sorted(P.blocks(n), key=lambda b: (-b.j, b.alpha.subset))]


def render_product_complex(P: ProductComplex) -> str:
    """
    Every differential of the assembly in display order (K_j summands with j descending), block separated
    """
    displayed = P.displayed()
    parts = []
    for n in range(P.window[0] + 1, P.window[1] + 1):
        parts.append('d_%d:' % n)
        parts.append(render_matrix(displayed.differential(n), display_block_sizes(P, n - 1),
                                   display_block_sizes(P, n)))
    return '\n'.join(parts)


def render_complex(C: FreeComplex) -> str:
    parts = []
    for n in range(C.lo + 1, C.hi + 1):
        parts.append('d_%d:' % n)
        parts.append(render_matrix(C.differential(n)))
    return '\n'.join(parts)
