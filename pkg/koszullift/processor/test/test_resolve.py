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

import unittest

from koszullift.kernel.datatypes.gradedring import GradedRing
from koszullift.kernel.datatypes.subtypes import Presentation
from koszullift.kernel.exceptions import DegreeBoundTooLowError, InvalidInputError
from koszullift.processor.algebra.complexes import check_complex, homology_dims, is_minimal, lift_to_Q
from koszullift.processor.construction import golden
from koszullift.processor.construction.assembly import product_window
from koszullift.processor.construction.resolve import resolve_over_R
from koszullift.processor.preprocessor.parser import matrix_from_lists


class TestResolveOverR(unittest.TestCase):
    def setUp(self):
        self.ring = golden.residue_field_ring()
        self.residue_field = golden.residue_field_presentation(self.ring)

    def test_residue_field(self):
        C = resolve_over_R(self.residue_field, 3, 8)
        self.assertEqual(C.window, (0, 3))
        self.assertTrue(C.bounded_below)
        self.assertFalse(C.bounded_above)
        for n in C.degrees:
            self.assertEqual(C.twists(n), tuple([n] * (n + 1)))
        self.assertTrue(check_complex(C).passed)
        self.assertTrue(is_minimal(C))
        self.assertIn('8', C.caveat)

    def test_free_module(self):
        C = resolve_over_R(Presentation(self.ring, [0]), 3, 4)
        self.assertEqual([C.rank(n) for n in C.degrees], [1, 0, 0, 0])
        self.assertTrue(C.bounded_above)

    def test_regular_element(self):
        # u + v is a nonzerodivisor on k[u,v]/(uv)
        ring = golden.matrix_factorization_ring()
        M = Presentation(ring, [0], matrix_from_lists(ring, [['u + v']]), [1])
        C = resolve_over_R(M, 3, 6)
        self.assertEqual([C.rank(n) for n in C.degrees], [1, 1, 0, 0])
        self.assertEqual(C.twists(1), (1,))
        # F_2 is empty only up to the degree bound
        self.assertFalse(C.bounded_above)

    def test_finite_field(self):
        ring = golden.residue_field_ring(7)
        C = resolve_over_R(golden.residue_field_presentation(ring), 2, 6)
        self.assertEqual([C.rank(n) for n in C.degrees], [1, 2, 3])
        self.assertTrue(check_complex(C).passed)


class TestResolveErrors(unittest.TestCase):
    def setUp(self):
        self.ring = golden.residue_field_ring()

    def test_bounds(self):
        M = golden.residue_field_presentation(self.ring)
        with self.assertRaises(ValueError):
            resolve_over_R(M, 0, 8)
        with self.assertRaises(ValueError):
            resolve_over_R(M, 2, 0)

    def test_relation_above_bound(self):
        M = Presentation(self.ring, [0], matrix_from_lists(self.ring, [['x*y']]), [2])
        with self.assertRaises(DegreeBoundTooLowError):
            resolve_over_R(M, 2, 1)

    def test_unit_entry(self):
        M = Presentation(self.ring, [0], matrix_from_lists(self.ring, [['1']]), [0])
        with self.assertRaises(InvalidInputError):
            resolve_over_R(M, 2, 4)

    def test_degree_bound_reached(self):
        with self.assertRaises(DegreeBoundTooLowError):
            resolve_over_R(golden.residue_field_presentation(self.ring), 3, 2)

    def test_plain_polynomial_ring(self):
        ring = GradedRing(['x', 'y'], 0)
        M = Presentation(ring, [0], matrix_from_lists(ring, [['x', 'y']]), [1, 1])
        C = resolve_over_R(M, 3, 5)
        self.assertEqual([C.rank(n) for n in C.degrees], [1, 2, 1, 0])

    def test_truncated_resolution_is_not_finite(self):
        # k over k[x]/(x^3) has generators in degrees 0, 1, 3, 4, 6, 7, ...
        ring = GradedRing(['x'], 0, [], [{(3,): 1}])
        M = Presentation(ring, [0], matrix_from_lists(ring, [['x']]), [1])
        C = resolve_over_R(M, 4, 5)
        self.assertEqual([C.twists(n) for n in C.degrees], [(0,), (1,), (3,), (4,), ()])
        self.assertFalse(C.bounded_above)
        self.assertEqual(homology_dims(C, [3], 7)[(3, 6)], 1)
        self.assertEqual(product_window(lift_to_Q(C)), (0, 4))


if __name__ == '__main__':
    unittest.main()
