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

import os
import unittest
from fractions import Fraction

from koszullift.kernel.datatypes.enumerations import Over
from koszullift.kernel.exceptions import InputFormatError
from koszullift.processor.construction import golden
from koszullift.processor.preprocessor.parser import (build_complex, build_presentation, build_ring, load_document,
                                                      parse_monomial, parse_terms)


def _res(name: str) -> str:
    return os.path.join(os.path.dirname(__file__), 'res/' + name)


class TestPolynomialText(unittest.TestCase):
    def test_terms(self):
        self.assertEqual(parse_terms('x^2*y - 3*y^3', ['x', 'y']), {(2, 1): 1, (0, 3): -3})
        self.assertEqual(parse_terms(' 1/2*x + x ', ['x']), {(1,): Fraction(3, 2)})
        self.assertEqual(parse_terms('x*y - y*x', ['x', 'y']), {})
        self.assertEqual(parse_terms('-7', ['x']), {(0,): -7})

    def test_malformed(self):
        for text in ('', 'z', 'x**2', '1/0*x', 'x^', '2x'):
            with self.subTest(text=text):
                with self.assertRaises(ValueError):
                    parse_terms(text, ['x', 'y'])

    def test_monomial(self):
        self.assertEqual(parse_monomial('x*y^2', ['x', 'y']), (1, 2))
        with self.assertRaises(ValueError):
            parse_monomial('2*x', ['x', 'y'])
        with self.assertRaises(ValueError):
            parse_monomial('x + y', ['x', 'y'])


class TestDocuments(unittest.TestCase):
    def setUp(self):
        self.ring = build_ring(load_document(_res('hypersurface_ring.yml')))

    def test_ring(self):
        self.assertEqual(self.ring.variables, ('x', 'y'))
        self.assertEqual(self.ring.relations, ((2, 0),))
        self.assertEqual(self.ring.codimension, 1)
        self.assertEqual(self.ring.sequence_degrees, (2,))

    def test_complex(self):
        C = build_complex(load_document(_res('hypersurface_complex.json')), self.ring)
        self.assertIs(C.over, Over.R)
        self.assertEqual(C, golden.hypersurface_complex(self.ring))

    def test_presentation(self):
        ring = build_ring(load_document(_res('residue_ring.yml')))
        M = build_presentation(load_document(_res('residue_presentation.yml')), ring)
        self.assertEqual(M.twists, (0,))
        self.assertEqual(M.relation_twists, (1, 1))
        self.assertEqual(M.relations, golden.residue_field_presentation(ring).relations)

    def test_mismatched_shape(self):
        with self.assertRaises(InputFormatError) as context:
            build_complex(load_document(_res('mismatched_complex.yml')), self.ring)
        self.assertIn('diffs.1', context.exception.diagnostics)

    def test_schema_errors(self):
        with self.assertRaises(InputFormatError) as context:
            build_ring({'field': 0})
        self.assertIn('variables', context.exception.diagnostics)
        with self.assertRaises(InputFormatError):
            build_ring({'field': 4, 'variables': ['x']})
        with self.assertRaises(InputFormatError):
            build_ring({'variables': ['x', 'x']})
        with self.assertRaises(InputFormatError):
            build_ring({'variables': ['x'], 'sequence': ['z^2']})
        with self.assertRaises(InputFormatError) as context:
            build_complex({'over': 'R', 'window': [0, 1], 'twists': {0: [0]}}, self.ring)
        self.assertIn('twists', context.exception.diagnostics)

    def test_differential_outside_window(self):
        document = {'over': 'R', 'window': [0, 1], 'twists': {0: [0], 1: [1]}, 'diffs': {2: [['x']]}}
        with self.assertRaises(InputFormatError):
            build_complex(document, self.ring)

    def test_missing_file(self):
        with self.assertRaises(InputFormatError):
            load_document(_res('no_such_file.yml'))


if __name__ == '__main__':
    unittest.main()
