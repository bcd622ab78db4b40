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

import logging
from typing import Dict, Hashable, List, Mapping, NamedTuple, Sequence, Tuple, Union

from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement

from koszullift.kernel.datatypes.enumerations import LinearSystemStatus
from koszullift.kernel.datatypes.gradedring import GradedRing, Monomial

logger = logging.getLogger(__name__)


class LinearConstraint(NamedTuple):
    """sum(coefficient * unknown for coefficient, unknown in terms) == rhs, computed in Q"""
    terms: Sequence[Tuple[PolyElement, Hashable]]
    rhs: PolyElement


def rref(domain, rows: Sequence[Sequence], ncols: int) -> Tuple[List[List], Tuple[int, ...]]:
    """
    Reduced row echelon form over an exact field

    :param domain: sympy field (QQ or GF(p))
    :param rows: dense rows of domain elements
    :param ncols: number of columns
    :return: the nonzero rows of the reduced form and the pivot columns
    """
    if len(rows) == 0 or ncols == 0:
        return [], ()
    reduced, pivots = DomainMatrix([list(r) for r in rows], (len(rows), ncols), domain).rref()
    dense = [[domain.from_sympy(v) for v in row] for row in reduced.to_Matrix().tolist()]
    return dense[:len(pivots)], tuple(pivots)


def rank(domain, rows: Sequence[Sequence], ncols: int) -> int:
    if len(rows) == 0 or ncols == 0:
        return 0
    return DomainMatrix([list(r) for r in rows], (len(rows), ncols), domain).rank()


def kernel_basis(domain, rows: Sequence[Sequence], ncols: int) -> List[List]:
    """
    Basis of the right kernel, one vector per free column in increasing column order
    """
    reduced, pivots = rref(domain, rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [domain.zero] * ncols
        vector[free] = domain.one
        for r, col in enumerate(pivots):
            vector[col] = -reduced[r][free]
        basis.append(vector)
    return basis


def coordinates(p: PolyElement, basis: Sequence[Monomial], domain) -> List:
    """
    :param p: polynomial supported on the basis monomials
    :param basis: monomials, greatest first
    :return: coefficient vector
    """
    return [p.get(m, domain.zero) for m in basis]


def solve_graded_linear(ring: GradedRing,
                        unknowns: Mapping[Hashable, int],
                        constraints: Sequence[LinearConstraint]) -> Union[Dict[Hashable, PolyElement],
                                                                          LinearSystemStatus]:
    """
    Solve k-linear constraints on unknown polynomials of forced degrees in Q = P/J

    Columns are the pairs (unknown, standard monomial of its degree), unknowns in the given order and
    monomials greatest first. Free variables are set to zero.

    :param ring: the ambient ring Q
    :param unknowns: ordered mapping unknown key -> forced degree
    :param constraints: list of LinearConstraint
    :return: key -> polynomial, or LinearSystemStatus.INCONSISTENT
    """
    domain = ring.domain
    zero = domain.zero
    columns = [(key, m) for key, degree in unknowns.items() for m in ring.basis(degree)]
    column_of = {c: i for i, c in enumerate(columns)}

    rows = []
    for constraint in constraints:
        equation = {}
        for coefficient, key in constraint.terms:
            if key not in unknowns:
                raise KeyError('Unknown %r is not declared' % (key,))
            if not coefficient:
                continue
            for m in ring.basis(unknowns[key]):
                col = column_of[(key, m)]
                for monomial, c in ring.reduce(coefficient.mul_monom(m)).items():
                    slot = equation.setdefault(monomial, {})
                    slot[col] = slot.get(col, zero) + c
        rhs = ring.reduce(constraint.rhs)
        for monomial in sorted(set(equation) | set(rhs.keys()), key=grlex, reverse=True):
            row = [zero] * (len(columns) + 1)
            for col, c in equation.get(monomial, {}).items():
                row[col] = c
            row[-1] = rhs.get(monomial, zero)
            rows.append(row)

    if all(not row[-1] for row in rows):
        return {key: ring.zero for key in unknowns}

    logger.debug('Solving %d equations in %d coordinates', len(rows), len(columns))
    reduced, pivots = rref(domain, rows, len(columns) + 1)
    if len(columns) in pivots:
        return LinearSystemStatus.INCONSISTENT

    terms = {key: {} for key in unknowns}
    for r, col in enumerate(pivots):
        key, m = columns[col]
        if reduced[r][-1]:
            terms[key][m] = reduced[r][-1]
    return {key: ring.poly_ring.from_dict(t) if t else ring.zero for key, t in terms.items()}
