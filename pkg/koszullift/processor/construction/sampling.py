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
from typing import NamedTuple, Optional

import numpy as np

from koszullift.kernel.datatypes.enumerations import Over
from koszullift.kernel.datatypes.freecomplex import FreeComplex
from koszullift.kernel.datatypes.gradedring import GradedRing
from koszullift.kernel.datatypes.polymatrix import PolyMatrix
from koszullift.kernel.datatypes.subtypes import Presentation
from koszullift.processor.construction.resolve import resolve_over_R

logger = logging.getLogger(__name__)

SAMPLING_CHARACTERISTIC = 32003
VARIABLE_NAMES = ('x', 'y', 'z')


class RandomInput(NamedTuple):
    ring: GradedRing
    presentation: Presentation
    complex: FreeComplex
    degree_bound: int


def _coefficient(rng: np.random.Generator, ring: GradedRing) -> int:
    if ring.characteristic:
        return int(rng.integers(1, ring.characteristic))
    return int(rng.choice([-2, -1, 1, 2]))


def _linear_form(rng: np.random.Generator, ring: GradedRing):
    terms = {}
    for v in range(ring.ngens):
        if rng.random() < 0.7:
            exponents = [0] * ring.ngens
            exponents[v] = 1
            terms[tuple(exponents)] = _coefficient(rng, ring)
    return ring.reduce(ring.from_terms(terms))


def _independent_linear_forms(rng: np.random.Generator, base: GradedRing, chosen):
    """
    l_i = x_(chosen_i) plus random multiples of the variables not among chosen_1..chosen_i, so the forms are
    unitriangular on the chosen columns
    """
    forms = []
    for i, v in enumerate(chosen):
        terms = {}
        for w in range(base.ngens):
            exponents = [0] * base.ngens
            exponents[w] = 1
            if w == v:
                terms[tuple(exponents)] = 1
            elif w not in chosen[:i + 1] and rng.random() < 0.7:
                terms[tuple(exponents)] = _coefficient(rng, base)
        forms.append(base.from_terms(terms))
    return forms


def random_ring(rng: np.random.Generator,
                characteristic: int = SAMPLING_CHARACTERISTIC,
                codimension: Optional[int] = None,
                max_variables: int = 3,
                linear_forms: Optional[bool] = None) -> GradedRing:
    """
    A ring whose sequence is regular by construction. Either powers x_i^(a_i) of distinct variables, with J
    generated by a square of a variable outside the sequence, if any; or powers l_i^(a_i) of linearly
    independent linear forms over the polynomial ring, J = 0, whose elements share variables

    :param rng:
    :param characteristic:
    :param codimension: c, drawn from 1..min(3, #variables) when omitted
    :param max_variables: at most len(VARIABLE_NAMES)
    :param linear_forms: which of the two families, drawn at random when omitted
    :return: GradedRing
    """
    if not 1 <= max_variables <= len(VARIABLE_NAMES):
        raise ValueError('Between 1 and %d variables are supported' % len(VARIABLE_NAMES))
    low = codimension if codimension is not None else 1
    if low > max_variables:
        raise ValueError('Codimension %d needs at least as many variables' % low)
    nvars = int(rng.integers(low, max_variables + 1))
    c = codimension if codimension is not None else int(rng.integers(1, min(3, nvars) + 1))
    chosen = sorted(int(v) for v in rng.choice(nvars, size=c, replace=False))
    names = list(VARIABLE_NAMES[:nvars])
    if linear_forms is None:
        linear_forms = bool(rng.random() < 0.5)

    if linear_forms:
        base = GradedRing(names, characteristic)
        sequence = [form ** int(rng.integers(1, 3)) for form in _independent_linear_forms(rng, base, chosen)]
        return GradedRing(names, characteristic, (), sequence)

    sequence = []
    for v in chosen:
        exponents = [0] * nvars
        exponents[v] = int(rng.integers(1, 3))
        sequence.append({tuple(exponents): 1})
    relations = []
    others = [v for v in range(nvars) if v not in chosen]
    if others and rng.random() < 0.5:
        exponents = [0] * nvars
        exponents[int(rng.choice(others))] = 2
        relations.append(tuple(exponents))
    return GradedRing(names, characteristic, relations, sequence)


def random_presentation(rng: np.random.Generator, ring: GradedRing) -> Presentation:
    """
    R/(l_1..l_r) for random linear forms l_i, one generator in degree 0
    """
    count = int(rng.integers(1, ring.ngens + 1))
    relations = PolyMatrix(ring, [[_linear_form(rng, ring) for _ in range(count)]], (1, count))
    return Presentation(ring, [0], relations, [1] * count)


def random_valid_input(rng: np.random.Generator,
                       characteristic: int = SAMPLING_CHARACTERISTIC,
                       codimension: Optional[int] = None,
                       max_variables: int = 3,
                       max_length: int = 6,
                       linear_forms: Optional[bool] = None) -> RandomInput:
    """
    A random graded complex over R that is valid input for the whole pipeline: the minimal resolution of a
    random cyclic module, on a window whose length shrinks as the codimension grows

    :param rng: numpy Generator, the only source of randomness
    :return: RandomInput
    """
    ring = random_ring(rng, characteristic, codimension, max_variables, linear_forms)
    presentation = random_presentation(rng, ring)
    length = max(2, min(max_length, 5 - ring.codimension))
    degree_bound = 2 * length + 3
    complex = resolve_over_R(presentation, length, degree_bound)
    logger.debug('Random input: %s, ranks %s', ring, [complex.rank(n) for n in complex.degrees])
    return RandomInput(ring, presentation, complex, degree_bound)


def random_finite_complex(rng: np.random.Generator, ring: GradedRing, max_rank: int = 2) -> FreeComplex:
    """
    0 -> R(-1)^b -> R^a -> 0 with a random linear differential, zero outside [0, 1]
    """
    a = int(rng.integers(1, max_rank + 1))
    b = int(rng.integers(1, max_rank + 1))
    rows = [[_linear_form(rng, ring) for _ in range(b)] for _ in range(a)]
    return FreeComplex(ring, Over.R, (0, 1), {0: [0] * a, 1: [1] * b}, {1: PolyMatrix(ring, rows, (a, b))},
                       bounded_below=True, bounded_above=True)


def perturb_lift(F: FreeComplex, rng: np.random.Generator) -> FreeComplex:
    """
    Add a random multiple g * f_k of matching degree to one differential entry; the result lifts the same
    complex over R

    :param F: a lift over Q
    :param rng:
    :return: FreeComplex, F itself when no entry has room for a multiple of f
    """
    ring = F.ring
    candidates = []
    for n in range(F.lo + 1, F.hi + 1):
        for i, target in enumerate(F.twists(n - 1)):
            for j, source in enumerate(F.twists(n)):
                for k, e in enumerate(ring.sequence_degrees):
                    if ring.basis(source - target - e):
                        candidates.append((n, i, j, k, source - target - e))
    if not candidates:
        return F
    n, i, j, k, degree = candidates[int(rng.integers(len(candidates)))]
    g = ring.from_terms({m: _coefficient(rng, ring) for m in ring.basis(degree)})
    return F.with_entry(n, i, j, F.differential(n)[i, j] + ring.reduce(g * ring.sequence[k]))
