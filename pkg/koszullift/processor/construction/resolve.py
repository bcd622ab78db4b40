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
from typing import Dict, List, Sequence, Tuple

from sympy.polys.rings import PolyElement

from koszullift.kernel.datatypes.enumerations import Over
from koszullift.kernel.datatypes.freecomplex import FreeComplex
from koszullift.kernel.datatypes.polymatrix import PolyMatrix
from koszullift.kernel.datatypes.subtypes import Presentation
from koszullift.kernel.exceptions import DegreeBoundTooLowError, InvalidInputError
from koszullift.processor.algebra.linear import kernel_basis, rank
from koszullift.processor.algebra.normalform import SequenceQuotient, sequence_quotient

logger = logging.getLogger(__name__)

# an element of a free module: one polynomial per generator
Element = List[PolyElement]


class _GradedFree:
    """Degree pieces of the free R-module with the given generator twists, in canonical coordinates"""

    def __init__(self, quotient: SequenceQuotient, twists: Sequence[int]):
        self._quotient = quotient
        self._twists = list(twists)
        self._pieces = {}

    def piece(self, degree: int) -> Dict[Tuple[int, tuple], int]:
        if degree not in self._pieces:
            index = {}
            for g, a in enumerate(self._twists):
                for m in self._quotient.standard_basis(degree - a):
                    index[(g, m)] = len(index)
            self._pieces[degree] = index
        return self._pieces[degree]

    def vector(self, element: Element, degree: int) -> List:
        ring = self._quotient.ring
        index = self.piece(degree)
        vector = [ring.domain.zero] * len(index)
        for g, p in enumerate(element):
            for m, c in self._quotient.canonical(p).items():
                vector[index[(g, m)]] += c
        return vector

    def element(self, vector: Sequence, degree: int) -> Element:
        ring = self._quotient.ring
        terms = [{} for _ in self._twists]
        for (g, m), k in self.piece(degree).items():
            if vector[k]:
                terms[g][m] = vector[k]
        return [ring.poly_ring.from_dict(t) if t else ring.zero for t in terms]


def _multiply(element: Element, monomial: tuple) -> Element:
    return [p.mul_monom(monomial) for p in element]


def _minimal_generators(quotient: SequenceQuotient,
                        module: _GradedFree,
                        candidates,
                        degrees: Sequence[int],
                        bound: int) -> List[Tuple[int, Element]]:
    """
    Walk the internal degrees upwards and keep the candidates of each degree that are not in the submodule
    generated by the elements kept so far

    :param candidates: degree -> list of elements of that degree, spanning the submodule in that degree
    :return: list of (degree, element) in the order they were kept
    """
    ring = quotient.ring
    kept = []
    for d in degrees:
        if d > bound:
            break
        index = module.piece(d)
        spanned = []
        for e, z in kept:
            for m in quotient.standard_basis(d - e):
                spanned.append(module.vector(_multiply(z, m), d))
        current = rank(ring.domain, spanned, len(index))
        pool = candidates(d)
        if rank(ring.domain, spanned + [module.vector(z, d) for z in pool], len(index)) == current:
            continue
        for z in pool:
            vector = module.vector(z, d)
            extended = rank(ring.domain, spanned + [vector], len(index))
            if extended > current:
                spanned.append(vector)
                current = extended
                kept.append((d, z))
    return kept


def resolve_over_R(M: Presentation, homological_bound: int, degree_bound: int) -> FreeComplex:
    """
    Minimal graded free resolution of M over R, computed degree by degree up to the degree bound

    :param M: presentation whose relation matrix has no unit entries
    :param homological_bound: N, the resolution is returned on the window [0, N]
    :param degree_bound: D, syzygies above this internal degree are not searched for
    :return: FreeComplex over R, bounded below
    :raises DegreeBoundTooLowError: when new generators still appear at degree D
    """
    ring = M.ring
    if homological_bound < 1:
        raise ValueError('The homological bound must be at least 1')
    if M.twists and degree_bound < max(M.twists) + 1:
        raise ValueError('The degree bound must exceed the largest generator degree')
    if M.relation_twists and max(M.relation_twists) > degree_bound:
        raise DegreeBoundTooLowError('Relations of degree %d lie above the degree bound %d'
                                     % (max(M.relation_twists), degree_bound))
    for i, j, p in M.relations.entries():
        if ring.constant_term(p):
            raise InvalidInputError('The presentation is not minimal: relation (%d, %d) has a unit entry' % (i, j))

    quotient = sequence_quotient(ring)
    twists = {0: list(M.twists)}
    diffs = {}

    columns = [[M.relations[i, j] for i in range(M.relations.nrows)] for j in range(M.relations.ncols)]
    by_degree = {}
    for b, column in zip(M.relation_twists, columns):
        by_degree.setdefault(b, []).append(column)
    candidates = lambda d: by_degree.get(d, [])

    for k in range(1, homological_bound + 1):
        source = _GradedFree(quotient, twists[k - 1])
        if k == 1:
            degrees = sorted(by_degree)
        else:
            degrees = list(range(min(twists[k - 1]), degree_bound + 1)) if twists[k - 1] else []
        generators = _minimal_generators(quotient, source, candidates, degrees, degree_bound)
        if any(d == degree_bound for d, _ in generators) and k > 1:
            raise DegreeBoundTooLowError('Syzygies of F_%d still appear in degree %d; raise the degree bound'
                                         % (k - 1, degree_bound))
        twists[k] = [d for d, _ in generators]
        rows = [[quotient.canonical(z[i]) for _, z in generators] for i in range(len(twists[k - 1]))]
        diffs[k] = PolyMatrix(ring, rows, (len(twists[k - 1]), len(generators)))
        logger.info('Resolution step %d: %d generators in degrees %s', k, len(generators), twists[k])

        target = source
        matrix = diffs[k]
        new = _GradedFree(quotient, twists[k])

        def kernel(d, matrix=matrix, target=target, new=new):
            index = new.piece(d)
            columns = []
            for (g, m) in index:
                image = [matrix[i, g].mul_monom(m) for i in range(matrix.nrows)]
                columns.append(target.vector(image, d))
            if not index:
                return []
            rows = [[column[r] for column in columns] for r in range(len(target.piece(d)))]
            return [new.element(v, d) for v in kernel_basis(ring.domain, rows, len(index))]

        candidates = kernel

    # an empty F_N may only mean its generators lie above D; F_1 = 0 is the one exact case
    complex = FreeComplex(ring, Over.R, (0, homological_bound), twists, diffs, bounded_below=True,
                          bounded_above=not twists[1],
                          caveat='exact up to internal degree %d' % degree_bound)
    return complex
