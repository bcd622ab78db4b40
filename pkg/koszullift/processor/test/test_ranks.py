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

import numpy as np
from scipy.special import comb

from koszullift.processor.algebra.complexes import lift_to_Q
from koszullift.processor.construction import golden
from koszullift.processor.construction.assembly import assemble
from koszullift.processor.construction.homotopy import solve_homotopies
from koszullift.processor.construction.ranks import (binomial_bounds, binomials, expected_ranks, rank_report,
                                                     total_rank_transfer, vandermonde_identity)
from koszullift.processor.construction.resolve import resolve_over_R
from koszullift.processor.construction.sampling import random_finite_complex


def _assembled(C):
    F = lift_to_Q(C)
    return assemble(F, solve_homotopies(F, C.ring.codimension))


class TestIdentities(unittest.TestCase):
    def test_binomials(self):
        self.assertEqual(binomials(4).tolist(), [1, 4, 6, 4, 1])
        self.assertEqual(binomials(0).tolist(), [1])

    def test_vandermonde(self):
        for d in range(13):
            for c in range(d + 1):
                for n in range(-1, d + 2):
                    left, right = vandermonde_identity(c, d, n)
                    self.assertEqual(left, right, (c, d, n))
        self.assertEqual(vandermonde_identity(2, 5, 3), (10, 10))
        self.assertEqual(vandermonde_identity(2, 5, 3)[1], comb(5, 3, exact=True))

    def test_vandermonde_range(self):
        with self.assertRaises(ValueError):
            vandermonde_identity(3, 2, 1)

    def test_total_rank_transfer(self):
        self.assertEqual(total_rank_transfer(3, 12, 2, 4),
                         {'dim_q': 4, 'premise': True, 'conclusion': True, 'holds': True})
        self.assertFalse(total_rank_transfer(4, 16, 2, 4)['premise'])
        self.assertFalse(total_rank_transfer(1, 1, 3, 2)['premise'])


class TestRankAccounting(unittest.TestCase):
    def test_hypersurface_example(self):
        ring = golden.hypersurface_ring()
        C = golden.hypersurface_complex(ring)
        P = _assembled(C)
        self.assertEqual(expected_ranks(C, 1, P.window), {-1: 3, 0: 2, 1: 3, 2: 5})
        report = rank_report(P, C, vandermonde=(2, 5, 3))
        self.assertTrue(report.passed, str(report.first_failure()))
        self.assertEqual([child.name for child in report.children], ['rank_per_degree', 'vandermonde'])

    def test_finite_complexes(self):
        rng = np.random.default_rng(11)
        for ring in (golden.hypersurface_ring(), golden.residue_field_ring()):
            c = ring.codimension
            for _ in range(5):
                C = random_finite_complex(rng, ring)
                P = _assembled(C)
                with self.subTest(c=c, ranks=[C.rank(0), C.rank(1)]):
                    self.assertEqual(P.complex.total_rank(), 2 ** c * C.total_rank())
                    report = rank_report(P, C, dim_q=2)
                    self.assertTrue(report.passed, str(report.first_failure()))
                    self.assertIn('total_rank', [child.name for child in report.children])

    def test_binomial_bounds(self):
        ring = golden.residue_field_ring()
        C = resolve_over_R(golden.residue_field_presentation(ring), 3, 6)
        P = _assembled(C)
        self.assertEqual([P.rank(n) for n in P.complex.degrees], [1, 4, 8, 12])
        rows = binomial_bounds(C, P, 2)
        self.assertTrue(all(row['holds'] for row in rows))
        self.assertTrue(rank_report(P, C, dim_q=2).passed)


if __name__ == '__main__':
    unittest.main()
