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

from typing import List, Tuple

from sympy.polys.rings import PolyElement

from koszullift.kernel.datatypes.enumerations import LinearSystemStatus
from koszullift.kernel.datatypes.gradedring import GradedRing, Monomial
from koszullift.processor.algebra.linear import LinearConstraint, coordinates, rref, solve_graded_linear


def normal_form(p: PolyElement, ring: GradedRing) -> PolyElement:
    """
    Delete every term of p divisible by a generator of J
    :param p:
    :param ring:
    :return: the normal form of p in Q = P/J
    """
    return ring.reduce(p)


def in_sequence_ideal(p: PolyElement, ring: GradedRing) -> bool:
    """
    Decide p in (f_1..f_c) inside Q, one homogeneous component at a time
    :param p:
    :param ring:
    :return: bool
    """
    for degree, component in ring.homogeneous_components(ring.reduce(p)).items():
        unknowns = {i: degree - d for i, d in enumerate(ring.sequence_degrees)}
        constraint = LinearConstraint([(f, i) for i, f in enumerate(ring.sequence)], component)
        if solve_graded_linear(ring, unknowns, [constraint]) is LinearSystemStatus.INCONSISTENT:
            return False
    return True


class SequenceQuotient:
    def __init__(self, ring: GradedRing):
        """
        Degreewise linear algebra of R = Q/(f): the subspace (f)_d of Q_d is kept in reduced row echelon
        form over the monomial basis of Q_d, its pivot monomials are eliminated from representatives.

        :param ring:
        """
        self._ring = ring
        self._pieces = {}

    @property
    def ring(self) -> GradedRing:
        return self._ring

    def multiples(self, degree: int) -> List[PolyElement]:
        """
        Spanning set f_i * m of (f)_d, m running over the standard monomials of degree d - deg f_i
        """
        result = []
        for f, d in zip(self._ring.sequence, self._ring.sequence_degrees):
            for m in self._ring.basis(degree - d):
                p = self._ring.reduce(f.mul_monom(m))
                if p:
                    result.append(p)
        return result

    def _piece(self, degree: int) -> Tuple[List[List], Tuple[int, ...]]:
        if degree not in self._pieces:
            basis = self._ring.basis(degree)
            rows = [coordinates(p, basis, self._ring.domain) for p in self.multiples(degree)]
            self._pieces[degree] = rref(self._ring.domain, rows, len(basis))
        return self._pieces[degree]

    def ideal_dimension(self, degree: int) -> int:
        return len(self._piece(degree)[1])

    def dimension(self, degree: int) -> int:
        """
        :return: dim_k R_d
        """
        return len(self._ring.basis(degree)) - self.ideal_dimension(degree)

    def standard_basis(self, degree: int) -> Tuple[Monomial, ...]:
        """
        Monomials of Q_d whose classes form a basis of R_d
        """
        pivots = set(self._piece(degree)[1])
        return tuple(m for k, m in enumerate(self._ring.basis(degree)) if k not in pivots)

    def canonical(self, p: PolyElement) -> PolyElement:
        """
        The representative of p modulo J + (f) without pivot monomials
        :param p: any polynomial
        :return: PolyElement
        """
        result = self._ring.zero
        for degree, component in self._ring.homogeneous_components(self._ring.reduce(p)).items():
            basis = self._ring.basis(degree)
            vector = coordinates(component, basis, self._ring.domain)
            reduced, pivots = self._piece(degree)
            for row, col in zip(reduced, pivots):
                factor = vector[col]
                if factor:
                    vector = [v - factor * r for v, r in zip(vector, row)]
            result += self._ring.poly_ring.from_dict({m: c for m, c in zip(basis, vector) if c})
        return result

    def contains(self, p: PolyElement) -> bool:
        return not self.canonical(p)


def sequence_quotient(ring: GradedRing) -> SequenceQuotient:
    return ring.derived('sequence_quotient', SequenceQuotient)
