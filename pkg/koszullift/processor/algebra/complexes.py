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
from typing import Dict, Iterable, List, Optional, Tuple

from koszullift.kernel.datatypes.enumerations import Over
from koszullift.kernel.datatypes.freecomplex import FreeComplex
from koszullift.kernel.datatypes.gradedring import Monomial
from koszullift.kernel.datatypes.polymatrix import PolyMatrix
from koszullift.kernel.datatypes.report import CheckReport
from koszullift.kernel.datatypes.subtypes import GradedDims
from koszullift.kernel.exceptions import WindowError
from koszullift.processor.algebra.linear import rank
from koszullift.processor.algebra.normalform import in_sequence_ideal, sequence_quotient, SequenceQuotient
from koszullift.processor.parallel import parallel_map
from koszullift.processor.preprocessor.serializer import format_polynomial

logger = logging.getLogger(__name__)


def check_complex(C: FreeComplex) -> CheckReport:
    """
    Homogeneity of every entry and d_{n-1} d_n = 0 over the ring the complex lives on.
    Complexes over R and lifts are checked modulo (f), complexes over Q exactly.

    :param C:
    :return: CheckReport, FAIL at the first offending entry
    """
    ring = C.ring
    for n in range(C.lo + 1, C.hi + 1):
        source, target = C.twists(n), C.twists(n - 1)
        for i, j, p in C.differential(n).entries():
            if not ring.is_homogeneous(p) or ring.homogeneous_degree(p) != source[j] - target[i]:
                return CheckReport.failing('check_complex',
                                           'entry %s is not homogeneous of degree %d'
                                           % (format_polynomial(p, ring), source[j] - target[i]),
                                           location={'n': n, 'row': i, 'col': j})

    modulo_sequence = C.over is Over.R or C.is_lift
    for n in range(C.lo + 2, C.hi + 1):
        composite = C.differential(n - 1) @ C.differential(n)
        for i, j, p in composite.entries():
            if modulo_sequence and in_sequence_ideal(p, ring):
                continue
            return CheckReport.failing('check_complex',
                                       'd_%d d_%d has entry %s != 0' % (n - 1, n, format_polynomial(p, ring)),
                                       location={'n': n, 'row': i, 'col': j})
    return CheckReport.passing('check_complex', data={'window': list(C.window), 'over': C.over.value})


def lift_to_Q(C: FreeComplex) -> FreeComplex:
    """
    Lift a complex over R to a sequence of maps over Q, keeping the stored representatives
    :param C: complex over R
    :return: FreeComplex over Q flagged as a lift
    """
    if C.over is not Over.R:
        raise ValueError('Only complexes over R are lifted, got one over %s' % C.over.value)
    return C.with_over(Over.Q, lift=True)


def reduce_to_R(F: FreeComplex) -> FreeComplex:
    """
    Base change F (x)_Q R; entries are kept verbatim as representatives
    """
    return F.with_over(Over.R)


def canonical_form(C: FreeComplex) -> FreeComplex:
    """
    Replace every entry by its canonical representative modulo J + (f)
    """
    return C.map_entries(sequence_quotient(C.ring).canonical)


def first_difference_mod_sequence(A: PolyMatrix, B: PolyMatrix) -> Optional[Tuple[int, int]]:
    """
    :return: the first position where A and B differ modulo (f), None when A = B over R
    """
    for i, j, p in (A - B).entries():
        if not in_sequence_ideal(p, A.ring):
            return i, j
    return None


def congruent_mod_sequence(A: PolyMatrix, B: PolyMatrix) -> bool:
    return first_difference_mod_sequence(A, B) is None


def is_minimal(C: FreeComplex) -> bool:
    ring = C.ring
    return all(not ring.constant_term(p) for m in C.differentials.values() for _, _, p in m.entries())


def _graded_piece(C: FreeComplex, n: int, degree: int) -> Dict[Tuple[int, Monomial], int]:
    """
    Monomial basis of (F_n)_d: pairs (generator, standard monomial of degree d - twist)
    """
    index = {}
    for g, a in enumerate(C.twists(n)):
        for m in C.ring.basis(degree - a):
            index[(g, m)] = len(index)
    return index


def _image_vectors(C: FreeComplex, n: int, source: Dict, target: Dict) -> List[List]:
    ring = C.ring
    matrix = C.differential(n)
    vectors = []
    for g, m in source:
        vector = [ring.domain.zero] * len(target)
        for i in range(matrix.nrows):
            entry = matrix[i, g]
            if not entry:
                continue
            for monomial, c in ring.reduce(entry.mul_monom(m)).items():
                vector[target[(i, monomial)]] += c
        vectors.append(vector)
    return vectors


def _multiple_vectors(C: FreeComplex, quotient: Optional[SequenceQuotient], n: int, degree: int,
                      index: Dict) -> List[List]:
    if quotient is None:
        return []
    vectors = []
    for g, a in enumerate(C.twists(n)):
        for p in quotient.multiples(degree - a):
            vector = [C.ring.domain.zero] * len(index)
            for monomial, c in p.items():
                vector[index[(g, monomial)]] = c
            vectors.append(vector)
    return vectors


def _homology_dimension(C: FreeComplex, quotient: Optional[SequenceQuotient], n: int, degree: int) -> int:
    domain = C.ring.domain
    here = _graded_piece(C, n, degree)
    below = _graded_piece(C, n - 1, degree)
    above = _graded_piece(C, n + 1, degree)

    multiples_below = _multiple_vectors(C, quotient, n - 1, degree, below)
    multiples_here = _multiple_vectors(C, quotient, n, degree, here)
    outgoing = _image_vectors(C, n, here, below)
    incoming = _image_vectors(C, n + 1, above, here)

    dimension = (len(here)
                 - rank(domain, outgoing + multiples_below, len(below))
                 + rank(domain, multiples_below, len(below))
                 - rank(domain, incoming + multiples_here, len(here)))
    if dimension < 0:
        raise ArithmeticError('Negative homology dimension at (%d, %d)' % (n, degree))
    return dimension


def homology_dims(C: FreeComplex, n_range: Iterable[int], bound: int) -> GradedDims:
    """
    dim_k H_n(C)_d for the given homological degrees and all internal degrees d <= bound

    :param C: a complex over Q or over R
    :param n_range: homological degrees, each with both d_n and d_{n+1} available
    :param bound: internal degree bound D
    :return: GradedDims
    """
    n_range = list(n_range)
    for n in n_range:
        if not (C.has_differential(n) and C.has_differential(n + 1)):
            raise WindowError('H_%d is not interior to the window [%d, %d]' % (n, C.lo, C.hi))
    quotient = sequence_quotient(C.ring) if C.over is Over.R else None
    tasks = [(n, d) for n in n_range if C.rank(n) for d in range(min(C.twists(n)), bound + 1)]
    logger.debug('Computing %d homology pieces over %s', len(tasks), C.over.value)
    values = parallel_map(lambda task: _homology_dimension(C, quotient, *task), tasks)
    return GradedDims(dict(zip(tasks, values)))


def interior_degrees(C: FreeComplex) -> List[int]:
    """
    Degrees n of the window with both d_n and d_{n+1} available, where homology is not a truncation artifact
    """
    return [n for n in C.degrees if C.has_differential(n) and C.has_differential(n + 1)]
