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
from typing import Any, Dict, Mapping, Sequence, Tuple

import yaml
from marshmallow import ValidationError
from sympy.polys.rings import PolyElement

from koszullift.kernel.datatypes.enumerations import Over
from koszullift.kernel.datatypes.freecomplex import FreeComplex
from koszullift.kernel.datatypes.gradedring import GradedRing, Monomial
from koszullift.kernel.datatypes.polymatrix import PolyMatrix
from koszullift.kernel.datatypes.subtypes import Presentation
from koszullift.kernel.exceptions import InputFormatError
from koszullift.kernel.schemas.complexschema import ComplexSchema
from koszullift.kernel.schemas.presentationschema import PresentationSchema
from koszullift.kernel.schemas.ringschema import RingSchema

_TERM = re.compile(r'[+-]?[^+-]+')
_NUMBER = re.compile(r'^(\d+)(?:/(\d+))?$')
_POWER = re.compile(r'^([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?$')


def parse_terms(text: str, variables: Sequence[str]) -> Dict[Monomial, Fraction]:
    """
    Parse 'x^2*y - 3*y^3' style text into exponent vector -> rational coefficient

    :param text: polynomial text; integer or a/b coefficients, '*' separated powers
    :param variables: declared variable names, in ring order
    :return: dict without zero coefficients
    :raises ValueError: on malformed text or undeclared variables
    """
    source = re.sub(r'\s+', '', str(text))
    if source == '':
        raise ValueError('Empty polynomial')
    terms = _TERM.findall(source)
    if ''.join(terms) != source:
        raise ValueError('Malformed polynomial %r' % text)
    position = {name: k for k, name in enumerate(variables)}
    result = {}
    for term in terms:
        sign = -1 if term[0] == '-' else 1
        body = term.lstrip('+-')
        coefficient = Fraction(sign)
        exponents = [0] * len(variables)
        for factor in body.split('*'):
            number = _NUMBER.match(factor)
            power = _POWER.match(factor)
            if number:
                denominator = int(number.group(2) or 1)
                if denominator == 0:
                    raise ValueError('Division by zero in %r' % text)
                coefficient *= Fraction(int(number.group(1)), denominator)
            elif power:
                name = power.group(1)
                if name not in position:
                    raise ValueError('Undeclared variable %r in %r' % (name, text))
                exponents[position[name]] += int(power.group(2) or 1)
            else:
                raise ValueError('Malformed factor %r in %r' % (factor, text))
        monomial = tuple(exponents)
        result[monomial] = result.get(monomial, Fraction(0)) + coefficient
    return {m: c for m, c in result.items() if c != 0}


def parse_polynomial(text: str, ring: GradedRing) -> PolyElement:
    return ring.from_terms(parse_terms(text, ring.variables))


def parse_monomial(text: str, variables: Sequence[str]) -> Monomial:
    terms = parse_terms(text, variables)
    if len(terms) != 1 or next(iter(terms.values())) != 1:
        raise ValueError('%r is not a monomial' % text)
    return next(iter(terms))


def load_document(filepath: str) -> Any:
    """
    Read a YAML or JSON input file
    :param filepath:
    :return: parsed document
    :raises InputFormatError: when the file cannot be read or parsed
    """
    try:
        with open(filepath, 'r') as f:
            return yaml.safe_load(f)
    except (OSError, yaml.YAMLError) as e:
        raise InputFormatError('Cannot read %s: %s' % (filepath, e))


def _validated(schema, document: Any, what: str) -> Dict[str, Any]:
    try:
        return schema.load(document)
    except ValidationError as e:
        raise InputFormatError('Invalid %s' % what, e.messages)


def build_ring(document: Any) -> GradedRing:
    data = _validated(RingSchema(), document, 'ring')
    variables = data['variables']
    try:
        relations = [parse_monomial(text, variables) for text in data['relations']]
        sequence = [parse_terms(text, variables) for text in data['sequence']]
        return GradedRing(variables, data['field'], relations, sequence)
    except (ValueError, ZeroDivisionError) as e:
        raise InputFormatError('Invalid ring: %s' % e)


def _matrix(rows: Sequence[Sequence[str]], ring: GradedRing, shape: Tuple[int, int], where: str) -> PolyMatrix:
    try:
        return PolyMatrix(ring, [[parse_polynomial(text, ring) for text in row] for row in rows], shape)
    except (ValueError, ZeroDivisionError) as e:
        raise InputFormatError('Invalid matrix %s: %s' % (where, e), {where: [str(e)]})


def build_complex(document: Any, ring: GradedRing) -> FreeComplex:
    data = _validated(ComplexSchema(), document, 'complex')
    lo, hi = data['window']
    twists = data['twists']
    try:
        diffs = {}
        for n, rows in data['diffs'].items():
            if n - 1 not in twists or n not in twists:
                raise ValueError('d_%d leaves the window [%d, %d]' % (n, lo, hi))
            diffs[n] = _matrix(rows, ring, (len(twists[n - 1]), len(twists[n])), 'diffs.%d' % n)
        return FreeComplex(ring, Over(data['over']), (lo, hi), twists, diffs,
                           bounded_below=data['bounded_below'], bounded_above=data['bounded_above'],
                           lift=data['lift'])
    except (ValueError, ZeroDivisionError) as e:
        raise InputFormatError('Invalid complex: %s' % e)


def build_presentation(document: Any, ring: GradedRing) -> Presentation:
    data = _validated(PresentationSchema(), document, 'presentation')
    twists, relation_twists = data['twists'], data['relation_twists']
    relations = _matrix(data['relations'], ring, (len(twists), len(relation_twists)), 'relations')
    try:
        return Presentation(ring, twists, relations, relation_twists)
    except (ValueError, ZeroDivisionError) as e:
        raise InputFormatError('Invalid presentation: %s' % e)


def complex_from_lists(ring: GradedRing, over: Over, window: Tuple[int, int], twists: Mapping[int, Sequence[int]],
                       diffs: Mapping[int, Sequence[Sequence[str]]], **flags) -> FreeComplex:
    """
    Convenience constructor from polynomial strings, used for embedded data and tests
    """
    matrices = {n: PolyMatrix(ring, [[parse_polynomial(t, ring) for t in row] for row in rows],
                              (len(twists[n - 1]), len(twists[n])))
                for n, rows in diffs.items()}
    return FreeComplex(ring, over, window, twists, matrices, **flags)


def matrix_from_lists(ring: GradedRing, rows: Sequence[Sequence[str]], shape: Tuple[int, int] = None) -> PolyMatrix:
    return PolyMatrix(ring, [[parse_polynomial(t, ring) for t in row] for row in rows], shape)
