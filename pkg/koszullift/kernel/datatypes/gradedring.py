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

import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Set, Tuple

from sympy import GF, QQ, isprime
from sympy.polys.monomials import monomial_divides
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

Monomial = Tuple[int, ...]

MAX_CODIMENSION = 16
MAX_CHARACTERISTIC = 2 ** 31

_IDENTIFIER = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')


@lru_cache(maxsize=None)
def degree_monomials(nvars: int, degree: int) -> Tuple[Monomial, ...]:
    """
    All exponent vectors of a given total degree, greatest first in graded lex order
    :param nvars: number of variables
    :param degree: total degree, negative degrees give the empty tuple
    :return: tuple of exponent tuples
    """
    if degree < 0:
        return ()
    result = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exponents = [0] * nvars
        for v in combo:
            exponents[v] += 1
        result.append(tuple(exponents))
    return tuple(sorted(result, key=grlex, reverse=True))


class GradedRing:
    def __init__(self,
                 variables: List[str],
                 characteristic: int = 0,
                 relations: Iterable[Monomial] = (),
                 sequence: Iterable[Mapping[Monomial, Any]] = ()):
        """
        Standard graded ring Q = k[variables]/J with J a monomial ideal, together with a
        homogeneous sequence f_1..f_c in the maximal ideal of Q defining R = Q/(f)

        :param variables: variable names, each of degree one
        :param characteristic: 0 for the rationals, a prime p < 2^31 for F_p
        :param relations: exponent vectors of the monomial generators of J
        :param sequence: the f_i as term dictionaries exponent vector -> coefficient
        """
        variables = list(variables)
        if len(variables) == 0:
            raise ValueError('A graded ring needs at least one variable')
        for name in variables:
            if not _IDENTIFIER.match(name):
                raise ValueError('Invalid variable name: %r' % name)
        if len(set(variables)) != len(variables):
            raise ValueError('Variable names must be distinct: %s' % variables)

        if characteristic == 0:
            domain = QQ
        elif characteristic < MAX_CHARACTERISTIC and isprime(characteristic):
            domain = GF(characteristic, symmetric=False)
        else:
            raise ValueError('Characteristic must be 0 or a prime below 2^31, got %s' % characteristic)

        self._variables = tuple(variables)
        self._characteristic = characteristic
        self._domain = domain
        self._poly_ring = PolyRing(self._variables, domain, grlex)
        self._basis_cache = {}
        self._derived = {}

        relations = [tuple(int(e) for e in m) for m in relations]
        for m in relations:
            if len(m) != len(variables) or min(m) < 0:
                raise ValueError('Relation %s does not match the variables %s' % (m, variables))
            if sum(m) == 0:
                raise ValueError('The relation 1 makes Q the zero ring')
        self._relations = tuple(sorted(set(relations), key=grlex, reverse=True))

        polys = []
        for terms in sequence:
            f = self.reduce(self.from_terms(terms))
            if not f:
                raise ValueError('Sequence element is zero in Q')
            degrees = self.degrees(f)
            if len(degrees) != 1:
                raise ValueError('Sequence element %s is not homogeneous' % f)
            if degrees.pop() == 0:
                raise ValueError('Sequence element %s has a constant term' % f)
            polys.append(f)
        if len(polys) > MAX_CODIMENSION:
            raise ValueError('At most %d sequence elements are supported' % MAX_CODIMENSION)
        self._sequence = tuple(polys)

    @property
    def variables(self) -> Tuple[str, ...]:
        return self._variables

    @property
    def ngens(self) -> int:
        return len(self._variables)

    @property
    def characteristic(self) -> int:
        return self._characteristic

    @property
    def domain(self):
        return self._domain

    @property
    def poly_ring(self) -> PolyRing:
        return self._poly_ring

    @property
    def relations(self) -> Tuple[Monomial, ...]:
        return self._relations

    @property
    def sequence(self) -> Tuple[PolyElement, ...]:
        return self._sequence

    @property
    def codimension(self) -> int:
        return len(self._sequence)

    @property
    def sequence_degrees(self) -> Tuple[int, ...]:
        return tuple(sum(next(iter(f.keys()))) for f in self._sequence)

    @property
    def zero(self) -> PolyElement:
        return self._poly_ring.zero

    @property
    def one(self) -> PolyElement:
        return self._poly_ring.one

    def scalar(self, value: Any):
        """
        Convert an int, Fraction or domain element into the coefficient field
        :param value:
        :return: domain element
        """
        if isinstance(value, Fraction):
            return self._domain.quo(self._domain.convert(value.numerator),
                                    self._domain.convert(value.denominator))
        return self._domain.convert(value)

    def from_terms(self, terms: Mapping[Monomial, Any]) -> PolyElement:
        if isinstance(terms, PolyElement):
            terms = dict(terms)
        result = {}
        for monomial, coefficient in terms.items():
            monomial = tuple(int(e) for e in monomial)
            if len(monomial) != self.ngens:
                raise ValueError('Monomial %s does not match the variables %s' % (monomial, self._variables))
            result[monomial] = self.scalar(coefficient)
        return self._poly_ring.from_dict(result)

    def monomial(self, exponents: Monomial, coefficient: Any = 1) -> PolyElement:
        return self.from_terms({tuple(exponents): coefficient})

    def is_standard(self, monomial: Monomial) -> bool:
        """
        :param monomial: exponent vector
        :return: True when the monomial survives in Q, i.e. no generator of J divides it
        """
        return not any(monomial_divides(g, monomial) for g in self._relations)

    def reduce(self, p: PolyElement) -> PolyElement:
        return self._poly_ring.from_dict({m: c for m, c in p.items() if self.is_standard(m)})

    def derived(self, key: str, factory: Callable[['GradedRing'], Any]) -> Any:
        """
        Structure computed once from this ring and kept on it, released together with the ring
        """
        if key not in self._derived:
            self._derived[key] = factory(self)
        return self._derived[key]

    def basis(self, degree: int) -> Tuple[Monomial, ...]:
        """
        Monomial basis of the degree piece Q_d, greatest first
        :param degree:
        :return: tuple of exponent tuples
        """
        if degree not in self._basis_cache:
            self._basis_cache[degree] = tuple(m for m in degree_monomials(self.ngens, degree)
                                              if self.is_standard(m))
        return self._basis_cache[degree]

    @staticmethod
    def degrees(p: PolyElement) -> Set[int]:
        return {sum(m) for m in p.keys()}

    def homogeneous_degree(self, p: PolyElement) -> Optional[int]:
        """
        :param p:
        :return: the common degree of the terms of p, None for the zero polynomial
        :raises ValueError: when p is not homogeneous
        """
        degrees = self.degrees(p)
        if len(degrees) == 0:
            return None
        if len(degrees) > 1:
            raise ValueError('%s is not homogeneous' % p)
        return degrees.pop()

    def is_homogeneous(self, p: PolyElement) -> bool:
        return len(self.degrees(p)) <= 1

    def homogeneous_components(self, p: PolyElement) -> Dict[int, PolyElement]:
        components = {}
        for m, c in p.items():
            components.setdefault(sum(m), {})[m] = c
        return {d: self._poly_ring.from_dict(terms) for d, terms in sorted(components.items())}

    def constant_term(self, p: PolyElement):
        return p.get((0,) * self.ngens, self._domain.zero)

    def __str__(self):
        field = 'QQ' if self._characteristic == 0 else 'GF(%d)' % self._characteristic
        return '%s[%s]/(%d relations), c=%d' % (field, ','.join(self._variables), len(self._relations),
                                                 self.codimension)

    def __repr__(self):
        return 'GradedRing(' + ', '.join(map(str, [list(self._variables), self._characteristic,
                                                   list(self._relations), list(self._sequence)])) + ')'
