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

from koszullift.kernel.datatypes.enumerations import Over, Verdict
from koszullift.kernel.datatypes.gradedring import GradedRing
from koszullift.kernel.datatypes.koszulindex import KoszulIndex, ONE
from koszullift.kernel.datatypes.polymatrix import PolyMatrix
from koszullift.kernel.datatypes.productcomplex import ProductComplex
from koszullift.kernel.exceptions import LevelTooLowError, WindowError, WrongCodimensionError
from koszullift.processor.algebra.complexes import check_complex, is_minimal, lift_to_Q
from koszullift.processor.construction import golden
from koszullift.processor.construction.assembly import (assemble, assemble_codim1, codimension_one_agreement,
                                                        epsilon_C, homology_comparison, lifting_verdict,
                                                        matrix_factorization_verdict, minimality_and_lifting_report,
                                                        product_window)
from koszullift.processor.construction.homotopy import solve_homotopies
from koszullift.processor.construction.resolve import resolve_over_R
from koszullift.processor.preprocessor.parser import complex_from_lists


class TestHypersurfaceAssembly(unittest.TestCase):
    def setUp(self):
        self.ring = golden.hypersurface_ring()
        self.C = golden.hypersurface_complex(self.ring)
        self.F = lift_to_Q(self.C)
        self.H = solve_homotopies(self.F, 1)
        self.P = assemble_codim1(self.F, self.H)

    def test_window(self):
        self.assertEqual(self.P.window, golden.EXPECTED_WINDOW)
        self.assertEqual(product_window(self.F), (-1, 2))

    def test_displayed_matrices(self):
        displayed = self.P.displayed()
        for m, (expected, row_sizes, col_sizes) in golden.expected_display(self.ring).items():
            with self.subTest(m=m):
                self.assertEqual(displayed.differential(m), expected)
                self.assertEqual(len(self.P.display_permutation(m - 1)), sum(row_sizes))
                self.assertEqual(len(self.P.display_permutation(m)), sum(col_sizes))

    def test_ranks(self):
        self.assertEqual(self.P.rank(2), 5)
        self.assertEqual([self.P.rank(n) for n in self.P.complex.degrees], [3, 2, 3, 5])

    def test_square_zero(self):
        self.assertTrue(check_complex(self.P.complex).passed)

    def test_agrees_with_general_assembly(self):
        general = assemble(self.F, self.H)
        self.assertTrue(codimension_one_agreement(self.F, self.H, general).passed)
        self.assertEqual(general.complex, self.P.complex)

    def test_homotopy_as_mapping(self):
        maps = {n: self.H.map(KoszulIndex.of(1), n) for n in self.H.positions(KoszulIndex.of(1))}
        self.assertEqual(assemble_codim1(self.F, maps).complex, self.P.complex)

    def test_epsilon(self):
        morphism, report = epsilon_C(self.P, self.C)
        self.assertTrue(report.passed)
        self.assertEqual(morphism.degrees, [-1, 0, 1, 2])
        for n in morphism.degrees:
            with self.subTest(n=n):
                order = self.P.display_permutation(n)
                shown = morphism.map(n).permuted(list(range(self.C.rank(n))), order)
                self.assertEqual(shown, golden.expected_epsilon_display(self.ring, self.C, n))

    def test_corrupted_epsilon(self):
        x, y = self.ring.poly_ring.gens[:2]
        block = self.P.k0_block(1)
        target = self.P.k0_block(0)
        corrupted = self.P.complex.with_entry(1, target.start, block.start, x * y)
        P = ProductComplex(corrupted, {n: self.P.blocks(n) for n in corrupted.degrees}, self.P.provenance,
                           self.P.family)
        self.assertFalse(epsilon_C(P, self.C)[1].passed)

    def test_homology(self):
        report = homology_comparison(self.P, self.C, 8)
        self.assertTrue(report.passed, str(report))
        self.assertEqual(report.data['degrees'], [0, 1])

    def test_verdicts(self):
        self.assertIs(lifting_verdict(self.H), Verdict.NOT_LIFTS)
        self.assertIsNone(matrix_factorization_verdict(self.F))
        report = minimality_and_lifting_report(self.P, self.H)
        self.assertFalse(report.data['minimal'])
        self.assertNotIn('matrix_factorization', report.data)

    def test_provenance(self):
        blocks = self.P.blocks(2)
        k1 = [k for k, b in enumerate(blocks) if b.alpha == KoszulIndex.of(1)][0]
        k0 = [k for k, b in enumerate(self.P.blocks(1)) if b.alpha == ONE][0]
        self.assertEqual(self.P.provenance[(2, k1, k0)], ('dK',))


class TestCodimensionZero(unittest.TestCase):
    def test_echo(self):
        ring = GradedRing(['x', 'y'], 0)
        C = complex_from_lists(ring, Over.R, (0, 1), {0: [0], 1: [1, 1]}, {1: [['x', 'y']]}, bounded_below=True)
        F = lift_to_Q(C)
        P = assemble(F, solve_homotopies(F, 0))
        self.assertEqual(P.window, C.window)
        self.assertEqual(P.differential(1), C.differential(1))
        self.assertEqual(P.complex.twists(1), C.twists(1))
        morphism, report = epsilon_C(P, C)
        self.assertTrue(report.passed)
        self.assertEqual(morphism.map(1), PolyMatrix.identity(ring, 2))


class TestAssemblyErrors(unittest.TestCase):
    def setUp(self):
        self.ring = golden.residue_field_ring()
        self.C = resolve_over_R(golden.residue_field_presentation(self.ring), 2, 6)
        self.F = lift_to_Q(self.C)

    def test_level_too_low(self):
        with self.assertRaises(LevelTooLowError):
            assemble(self.F, solve_homotopies(self.F, 1))

    def test_wrong_codimension(self):
        with self.assertRaises(WrongCodimensionError):
            assemble_codim1(self.F, solve_homotopies(self.F, 2))

    def test_short_window(self):
        C = complex_from_lists(self.ring, Over.R, (0, 1), {0: [0], 1: [1, 1]}, {1: [['x', 'y']]})
        with self.assertRaises(WindowError):
            product_window(lift_to_Q(C))


class TestLiftingDichotomy(unittest.TestCase):
    def test_matrix_factorization(self):
        ring = golden.matrix_factorization_ring()
        C = golden.matrix_factorization_complex(5, ring)
        F = lift_to_Q(C)
        H = solve_homotopies(F, 1)
        e = KoszulIndex.of(1)
        for n in H.positions(e):
            self.assertEqual(H.map(e, n), PolyMatrix.scalar(ring, 1, -ring.one))
        P = assemble(F, H)
        self.assertTrue(check_complex(P.complex).passed)
        self.assertIs(matrix_factorization_verdict(F), Verdict.MATRIX_FACTORIZATION)
        report = minimality_and_lifting_report(P, H)
        self.assertEqual(report.data, {'minimal': False, 'lifting': 'NOT_LIFTS',
                                       'matrix_factorization': 'MATRIX_FACTORIZATION'})

    def test_genuine_complex_lifts(self):
        ring = GradedRing(['x', 'y', 'z'], 0, [], [{(0, 0, 2): 1}])
        C = complex_from_lists(ring, Over.R, (0, 2), {0: [0], 1: [1, 1], 2: [2]},
                               {1: [['x', 'y']], 2: [['-y'], ['x']]}, bounded_below=True, bounded_above=True)
        F = lift_to_Q(C)
        H = solve_homotopies(F, 1)
        P = assemble(F, H)
        self.assertIs(lifting_verdict(H), Verdict.LIFTS)
        self.assertTrue(is_minimal(P.complex))
        self.assertEqual(P.window, (0, 3))
        # F_0 (x) e1 -> F_0 (x) 1 is multiplication by z^2
        z = ring.poly_ring.gens[2]
        block = P.block(1, KoszulIndex.of(1))
        target = P.k0_block(0)
        self.assertEqual(P.differential(1)[target.start, block.start], z ** 2)
        self.assertTrue(homology_comparison(P, C, 6).passed)


if __name__ == '__main__':
    unittest.main()
