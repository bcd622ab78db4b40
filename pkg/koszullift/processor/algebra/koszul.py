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
from itertools import product
from typing import Dict, List, Tuple

from sympy.polys.rings import PolyElement

from koszullift.kernel.datatypes.enumerations import Over
from koszullift.kernel.datatypes.freecomplex import FreeComplex
from koszullift.kernel.datatypes.gradedring import GradedRing
from koszullift.kernel.datatypes.koszulindex import KoszulIndex, SignedIndex, ZERO
from koszullift.kernel.datatypes.polymatrix import PolyMatrix
from koszullift.kernel.datatypes.report import CheckReport
from koszullift.processor.algebra.complexes import homology_dims

logger = logging.getLogger(__name__)

# exterior algebra element: basis index -> coefficient in Q
Element = Dict[KoszulIndex, PolyElement]


def parity_sign(k: int) -> int:
    return -1 if k % 2 else 1


def inversions(sequence: Tuple[int, ...]) -> int:
    return sum(1 for a in range(len(sequence)) for b in range(a + 1, len(sequence)) if sequence[a] > sequence[b])


def wedge(alpha: KoszulIndex, beta: KoszulIndex) -> SignedIndex:
    """
    alpha ^ beta = sign * [alpha beta], the sign being (-1) to the number of inversions of alpha followed by beta
    :param alpha: basis element, not ZERO
    :param beta: basis element, not ZERO
    :return: SignedIndex, (ZERO, 0) when the subsets meet
    """
    if alpha.is_zero or beta.is_zero:
        raise ValueError('Cannot wedge the basis element 0')
    if not alpha.disjoint(beta):
        return SignedIndex(ZERO, 0)
    return SignedIndex(KoszulIndex(sorted(alpha.subset + beta.subset)),
                       parity_sign(inversions(alpha.subset + beta.subset)))


def insertion_count(i: int, gamma: KoszulIndex) -> int:
    """
    :return: #{j in gamma : j < i}, so that e_i ^ gamma = (-1)^count [e_i gamma]
    """
    return sum(1 for j in gamma if j < i)


def koszul_differential(alpha: KoszulIndex, ring: GradedRing) -> List[Tuple[PolyElement, KoszulIndex]]:
    """
    d(e_{i_1}^...^e_{i_j}) = sum_l (-1)^(l+1) f_{i_l} e_{i_1}^..(omit i_l)..^e_{i_j}
    :param alpha: basis element, not ZERO
    :param ring: ring carrying f
    :return: list of (coefficient, basis element)
    """
    if alpha.is_zero:
        raise ValueError('The Koszul differential is not defined on 0')
    result = []
    for l, i in enumerate(alpha.subset):
        f = ring.sequence[i - 1]
        result.append((f if l % 2 == 0 else -f, alpha.without(i)))
    return result


def _add(target: Element, index: KoszulIndex, coefficient: PolyElement):
    value = target.get(index, coefficient.ring.zero) + coefficient
    if value:
        target[index] = value
    else:
        target.pop(index, None)


def wedge_elements(a: Element, b: Element, ring: GradedRing) -> Element:
    result = {}
    for (alpha, p), (beta, q) in product(a.items(), b.items()):
        index, sign = wedge(alpha, beta)
        if sign:
            _add(result, index, ring.reduce(p * q) if sign > 0 else -ring.reduce(p * q))
    return result


def differential_element(a: Element, ring: GradedRing) -> Element:
    result = {}
    for alpha, p in a.items():
        for coefficient, beta in koszul_differential(alpha, ring):
            _add(result, beta, ring.reduce(coefficient * p))
    return result


def basis_element(alpha: KoszulIndex, ring: GradedRing) -> Element:
    return {alpha: ring.one}


def koszul_complex(ring: GradedRing) -> FreeComplex:
    """
    The Koszul complex on f as a finite complex over Q, K_j with basis the j-subsets in sorted order
    """
    c = ring.codimension
    degrees = ring.sequence_degrees
    twists = {j: [sum(degrees[i - 1] for i in alpha) for alpha in KoszulIndex.basis(c, j)] for j in range(c + 1)}
    diffs = {}
    for j in range(1, c + 1):
        targets = {beta: row for row, beta in enumerate(KoszulIndex.basis(c, j - 1))}
        rows = [[ring.zero] * len(twists[j]) for _ in targets]
        for col, alpha in enumerate(KoszulIndex.basis(c, j)):
            for coefficient, beta in koszul_differential(alpha, ring):
                rows[targets[beta]][col] += coefficient
        diffs[j] = PolyMatrix(ring, rows, (len(targets), len(twists[j])))
    return FreeComplex(ring, Over.Q, (0, c), twists, diffs, bounded_below=True, bounded_above=True)


def check_regular_up_to(ring: GradedRing, bound: int) -> CheckReport:
    """
    Koszul homology check: H_i(K)_d = 0 for all i >= 1 and d <= bound
    :param ring:
    :param bound: internal degree bound D
    :return: CheckReport, FAIL at the first nonzero (i, d)
    """
    c = ring.codimension
    if c == 0:
        return CheckReport.passing('check_regular_up_to', data={'degree_bound': bound})
    if bound < max(ring.sequence_degrees):
        raise ValueError('Degree bound %d is below the largest degree of f' % bound)
    dims = homology_dims(koszul_complex(ring), range(1, c + 1), bound)
    for (i, d), value in dims.items():
        if value:
            logger.info('Koszul homology H_%d in degree %d has dimension %d', i, d, value)
            return CheckReport.failing('check_regular_up_to', 'H_%d(K)_%d has dimension %d' % (i, d, value),
                                       location={'i': i, 'd': d}, data={'degree_bound': bound})
    return CheckReport.passing('check_regular_up_to', data={'degree_bound': bound})


def koszul_sign_checks(ring: GradedRing) -> CheckReport:
    """
    Exhaustive checks of the exterior algebra conventions on all basis elements for the codimension of the ring
    :param ring: ring whose sequence feeds the Leibniz and d^2 checks
    :return: CheckReport with one child per identity
    """
    c = ring.codimension
    basis = KoszulIndex.basis(c)
    children = []

    def first(name, failures):
        for detail, location in failures:
            return CheckReport.failing(name, detail, location)
        return CheckReport.passing(name)

    def anticommutativity():
        for alpha, beta in product(basis, basis):
            left, right = wedge(alpha, beta), wedge(beta, alpha)
            if left.sign and left.sign != parity_sign(alpha.degree * beta.degree) * right.sign:
                yield 'alpha^beta != (-1)^(|alpha||beta|) beta^alpha', {'alpha': str(alpha), 'beta': str(beta)}

    def associativity():
        for alpha, beta, gamma in product(basis, basis, basis):
            ab, ab_sign = wedge(alpha, beta)
            bc, bc_sign = wedge(beta, gamma)
            left = wedge(ab, gamma) if ab_sign else SignedIndex(ZERO, 0)
            right = wedge(alpha, bc) if bc_sign else SignedIndex(ZERO, 0)
            if (left.index, left.sign * ab_sign) != (right.index, right.sign * bc_sign):
                yield '(alpha^beta)^gamma != alpha^(beta^gamma)', {'alpha': str(alpha), 'beta': str(beta),
                                                                   'gamma': str(gamma)}

    def leibniz():
        for alpha, y in product(basis, basis):
            a, b = basis_element(alpha, ring), basis_element(y, ring)
            left = differential_element(wedge_elements(a, b, ring), ring)
            right = wedge_elements(differential_element(a, ring), b, ring)
            second = wedge_elements(a, differential_element(b, ring), ring)
            for index, p in second.items():
                _add(right, index, p if alpha.degree % 2 == 0 else -p)
            if left != right:
                yield 'd(alpha^y) != d(alpha)^y + (-1)^|alpha| alpha^d(y)', {'alpha': str(alpha), 'y': str(y)}

    def square_zero():
        for alpha in basis:
            if differential_element(differential_element(basis_element(alpha, ring), ring), ring):
                yield 'd(d(alpha)) != 0', {'alpha': str(alpha)}

    def associated_signs():
        # ([e_i beta] alpha) + (e_i gamma) = (beta alpha) + (e_i beta), gamma = [beta alpha]
        for alpha, beta in product(basis, basis):
            if not alpha.disjoint(beta):
                continue
            gamma = wedge(beta, alpha).index
            for i in range(1, c + 1):
                if i in gamma:
                    continue
                e_i_beta = KoszulIndex(sorted(beta.subset + (i,)))
                left = inversions(e_i_beta.subset + alpha.subset) + insertion_count(i, gamma)
                right = inversions(beta.subset + alpha.subset) + insertion_count(i, beta)
                if (left - right) % 2:
                    yield 'sign identity fails', {'i': i, 'alpha': str(alpha), 'beta': str(beta)}

    def exchanged_signs():
        # alpha = [e_i beta'], alpha' = [e_i beta]
        for beta, beta_prime in product(basis, basis):
            if not beta.disjoint(beta_prime):
                continue
            for i in range(1, c + 1):
                if i in beta or i in beta_prime:
                    continue
                alpha = KoszulIndex(sorted(beta_prime.subset + (i,)))
                alpha_prime = KoszulIndex(sorted(beta.subset + (i,)))
                left = inversions(beta.subset + alpha.subset) + insertion_count(i, beta)
                right = (inversions(beta_prime.subset + alpha_prime.subset) + insertion_count(i, beta_prime)
                         + beta_prime.degree + alpha.degree * beta.degree)
                if (left - right) % 2:
                    yield 'exchange sign identity fails', {'i': i, 'beta': str(beta), 'beta_prime': str(beta_prime)}

    for name, checks in (('anticommutativity', anticommutativity), ('associativity', associativity),
                         ('leibniz', leibniz), ('koszul_square_zero', square_zero),
                         ('insertion_sign_identity', associated_signs), ('exchange_sign_identity', exchanged_signs)):
        children.append(first(name, checks()))
    return CheckReport.aggregate('koszul_sign_checks', children, data={'c': c, 'basis_size': len(basis) + 1})
