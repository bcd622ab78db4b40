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

from koszullift.kernel.datatypes.enumerations import Outcome, Over
from koszullift.kernel.datatypes.freecomplex import FreeComplex
from koszullift.kernel.datatypes.gradedring import GradedRing, degree_monomials
from koszullift.kernel.datatypes.homotopyfamily import HomotopyFamily
from koszullift.kernel.datatypes.koszulindex import KoszulIndex, ONE, ZERO
from koszullift.kernel.datatypes.polymatrix import PolyMatrix
from koszullift.kernel.datatypes.report import CheckReport
from koszullift.kernel.datatypes.subtypes import GradedDims, JobSpec, Presentation
from koszullift.kernel.exceptions import WindowError


class TestGradedRing(unittest.TestCase):
    def setUp(self):
        self.ring = GradedRing(['x', 'y'], 0, [(2, 0)], [{(0, 2): 1}])

    def test_degree_monomials(self):
        self.assertEqual(degree_monomials(2, 2), ((2, 0), (1, 1), (0, 2)))
        self.assertEqual(degree_monomials(3, 0), ((0, 0, 0),))
        self.assertEqual(degree_monomials(2, -1), ())

    def test_basis(self):
        self.assertEqual(self.ring.basis(2), ((1, 1), (0, 2)))
        self.assertEqual(self.ring.basis(3), ((1, 2), (0, 3)))
        self.assertEqual(self.ring.basis(-1), ())

    def test_sequence(self):
        self.assertEqual(self.ring.codimension, 1)
        self.assertEqual(self.ring.sequence_degrees, (2,))
        self.assertEqual(self.ring.characteristic, 0)

    def test_reduce(self):
        x, y = self.ring.poly_ring.gens
        self.assertEqual(self.ring.reduce(x ** 2 * y + x * y), x * y)
        self.assertEqual(self.ring.reduce(self.ring.zero), self.ring.zero)

    def test_homogeneity(self):
        x, y = self.ring.poly_ring.gens
        self.assertEqual(self.ring.homogeneous_degree(x * y + y ** 2), 2)
        self.assertIsNone(self.ring.homogeneous_degree(self.ring.zero))
        self.assertFalse(self.ring.is_homogeneous(x + y ** 2))
        with self.assertRaises(ValueError):
            self.ring.homogeneous_degree(x + y ** 2)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            GradedRing([], 0)
        with self.assertRaises(ValueError):
            GradedRing(['x', 'x'], 0)
        with self.assertRaises(ValueError):
            GradedRing(['x'], 4)
        with self.assertRaises(ValueError):
            GradedRing(['x'], 0, [(0,)])
        with self.assertRaises(ValueError):
            GradedRing(['x', 'y'], 0, [], [{(1, 0): 1, (0, 2): 1}])
        with self.assertRaises(ValueError):
            GradedRing(['x', 'y'], 0, [(2, 0)], [{(2, 0): 1}])
        with self.assertRaises(ValueError):
            GradedRing(['x'], 0, [], [{(0,): 1}])

    def test_finite_field(self):
        ring = GradedRing(['x'], 7, [], [{(1,): 8}])
        self.assertEqual(ring.sequence[0], ring.poly_ring.gens[0])


class TestKoszulIndex(unittest.TestCase):
    def test_degrees(self):
        self.assertEqual(ZERO.degree, -1)
        self.assertEqual(ONE.degree, 0)
        self.assertEqual(KoszulIndex.of(3, 1).subset, (1, 3))
        self.assertTrue(ONE.is_one)
        self.assertTrue(ZERO.is_zero)

    def test_basis_order(self):
        self.assertEqual([str(a) for a in KoszulIndex.basis(2)], ['1', 'e1', 'e2', 'e1^e2'])
        self.assertEqual(len(KoszulIndex.basis(4)), 16)
        self.assertEqual(KoszulIndex.basis(3, 2), [KoszulIndex.of(1, 2), KoszulIndex.of(1, 3), KoszulIndex.of(2, 3)])

    def test_json(self):
        self.assertIsNone(ZERO.to_json())
        self.assertEqual(ONE.to_json(), [])
        self.assertEqual(KoszulIndex.from_json([1, 3]), KoszulIndex.of(1, 3))
        self.assertEqual(KoszulIndex.from_json(None), ZERO)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            KoszulIndex((2, 1))
        with self.assertRaises(ValueError):
            KoszulIndex((0,))
        with self.assertRaises(ValueError):
            KoszulIndex((1,), zero=True)

    def test_set_operations(self):
        alpha = KoszulIndex.of(1, 3)
        self.assertIn(3, alpha)
        self.assertTrue(alpha.disjoint(KoszulIndex.of(2)))
        self.assertFalse(alpha.disjoint(KoszulIndex.of(3)))
        self.assertEqual(alpha.without(1), KoszulIndex.of(3))
        self.assertEqual(len({alpha, KoszulIndex.of(3, 1)}), 1)


class TestPolyMatrix(unittest.TestCase):
    def setUp(self):
        self.ring = GradedRing(['x', 'y'], 0, [(2, 0)])
        self.x, self.y = self.ring.poly_ring.gens

    def test_reduced_entries(self):
        m = PolyMatrix(self.ring, [[self.x ** 2, self.x * self.y]])
        self.assertEqual(m[0, 0], self.ring.zero)
        self.assertEqual(m.first_nonzero(), (0, 1))

    def test_product(self):
        a = PolyMatrix(self.ring, [[self.x, self.y]])
        b = PolyMatrix(self.ring, [[self.x], [self.y]])
        self.assertEqual((a @ b)[0, 0], self.y ** 2)
        self.assertEqual((b @ a).shape, (2, 2))
        with self.assertRaises(ValueError):
            a @ a

    def test_blocks(self):
        identity = PolyMatrix.identity(self.ring, 2)
        row = PolyMatrix(self.ring, [[self.x, self.y]])
        m = PolyMatrix.from_blocks(self.ring, [1, 2], [2], {(0, 0): row, (1, 0): identity})
        self.assertEqual(m.shape, (3, 2))
        self.assertEqual(m[2, 1], self.ring.one)
        self.assertEqual(m.permuted([1, 2, 0], [0, 1])[2, 1], self.y)

    def test_empty(self):
        empty = PolyMatrix.zeros(self.ring, 0, 3)
        self.assertEqual(empty.shape, (0, 3))
        self.assertTrue(empty.is_zero())
        with self.assertRaises(ValueError):
            PolyMatrix(self.ring, [])

    def test_equality(self):
        a = PolyMatrix(self.ring, [[self.x, self.y]])
        self.assertEqual(a, PolyMatrix(self.ring, [[self.x, self.y]]))
        self.assertNotEqual(a, a.with_entry(0, 0, self.y))
        self.assertEqual(-(-a), a)


class TestFreeComplex(unittest.TestCase):
    def setUp(self):
        self.ring = GradedRing(['x'], 0)
        x = self.ring.poly_ring.gens[0]
        self.d = PolyMatrix(self.ring, [[x]])
        self.C = FreeComplex(self.ring, Over.Q, (0, 1), {0: [0], 1: [1]}, {1: self.d}, bounded_below=True)

    def test_window(self):
        self.assertEqual(self.C.rank(-1), 0)
        self.assertEqual(self.C.differential(0).shape, (0, 1))
        self.assertFalse(self.C.has_module(2))
        with self.assertRaises(WindowError):
            self.C.twists(2)
        with self.assertRaises(WindowError):
            self.C.differential(2)

    def test_validation(self):
        with self.assertRaises(ValueError):
            FreeComplex(self.ring, Over.Q, (0, 1), {0: [0]})
        with self.assertRaises(ValueError):
            FreeComplex(self.ring, Over.Q, (0, 1), {0: [0], 1: [1]}, {2: self.d})
        with self.assertRaises(ValueError):
            FreeComplex(self.ring, Over.R, (0, 1), {0: [0], 1: [1]}, lift=True)

    def test_permuted(self):
        x = self.ring.poly_ring.gens[0]
        C = FreeComplex(self.ring, Over.Q, (0, 1), {0: [0], 1: [1, 2]},
                        {1: PolyMatrix(self.ring, [[x, x ** 2]])})
        swapped = C.permuted({1: [1, 0]})
        self.assertEqual(swapped.twists(1), (2, 1))
        self.assertEqual(swapped.differential(1)[0, 0], x ** 2)
        with self.assertRaises(ValueError):
            C.permuted({1: [0, 0]})

    def test_copies(self):
        lifted = self.C.with_over(Over.Q, lift=True)
        self.assertTrue(lifted.is_lift)
        self.assertEqual(self.C.with_entry(1, 0, 0, self.ring.zero).differential(1), PolyMatrix.zeros(self.ring, 1, 1))
        self.assertEqual(self.C, self.C.map_entries(lambda p: p))


class TestHomotopyFamily(unittest.TestCase):
    def setUp(self):
        self.ring = GradedRing(['x'], 0, [], [{(2,): 1}])
        x = self.ring.poly_ring.gens[0]
        self.F = FreeComplex(self.ring, Over.Q, (0, 2), {0: [0], 1: [1], 2: [2]},
                             {1: PolyMatrix(self.ring, [[x]]), 2: PolyMatrix(self.ring, [[x]])}, lift=True)

    def test_defaults(self):
        H = HomotopyFamily(self.F, {}, 1)
        self.assertEqual(H.map(ZERO, 1), PolyMatrix.identity(self.ring, 1))
        self.assertEqual(H.map(ONE, 2), self.F.differential(2))
        self.assertTrue(H.map(KoszulIndex.of(1), 2).is_zero())
        self.assertEqual(H.entry_degree(KoszulIndex.of(1), 2, 0, 0), 0)
        self.assertTrue(H.is_trivial())

    def test_level(self):
        with self.assertRaises(ValueError):
            HomotopyFamily(self.F, {}, 2)
        H = HomotopyFamily(self.F, {}, 0)
        with self.assertRaises(WindowError):
            H.map(KoszulIndex.of(1), 2)

    def test_with_entry(self):
        H = HomotopyFamily(self.F, {}, 1).with_entry(KoszulIndex.of(1), 2, 0, 0, -self.ring.one)
        self.assertEqual(H.map(KoszulIndex.of(1), 2)[0, 0], -self.ring.one)
        self.assertFalse(H.is_trivial())


class TestReports(unittest.TestCase):
    def test_aggregate(self):
        report = CheckReport.aggregate('all', [CheckReport.passing('a'),
                                               CheckReport.failing('b', 'broken', location={'n': 2})])
        self.assertEqual(report.outcome, Outcome.FAIL)
        self.assertFalse(report)
        self.assertEqual(report.first_failure().name, 'b')
        self.assertEqual(str(report.first_failure()), 'b: FAIL at n=2 (broken)')

    def test_passing(self):
        report = CheckReport.aggregate('all', [CheckReport.passing('a')])
        self.assertTrue(report.passed)
        self.assertIsNone(report.first_failure())


class TestSubtypes(unittest.TestCase):
    def setUp(self):
        self.ring = GradedRing(['x', 'y'], 0)
        self.x, self.y = self.ring.poly_ring.gens

    def test_graded_dims(self):
        dims = GradedDims({(0, 0): 1, (1, 2): 0})
        self.assertEqual(dims[(0, 0)], 1)
        self.assertEqual(dims[(5, 5)], 0)
        self.assertEqual(dims.support(), [(0, 0)])
        self.assertEqual(dims, GradedDims({(0, 0): 1}))
        self.assertEqual(dims.to_json(), {'0': {'0': 1}, '1': {'2': 0}})
        with self.assertRaises(ValueError):
            GradedDims({(0, 0): -1})

    def test_presentation(self):
        M = Presentation(self.ring, [0], PolyMatrix(self.ring, [[self.x, self.y ** 2]]), [1, 2])
        self.assertEqual(M.relation_twists, (1, 2))
        with self.assertRaises(ValueError):
            Presentation(self.ring, [0], PolyMatrix(self.ring, [[self.x, self.y]]), [1, 2])
        self.assertEqual(Presentation(self.ring, [0, 1]).relations.shape, (2, 0))

    def test_job_spec(self):
        with self.assertRaises(ValueError):
            JobSpec('verify', ring=self.ring)
        with self.assertRaises(ValueError):
            JobSpec('example', output_format='xml')
        with self.assertRaises(ValueError):
            JobSpec('suite', count=-1)
        self.assertEqual(JobSpec('example', example='hypersurface').output_format, 'text')


if __name__ == '__main__':
    unittest.main()
