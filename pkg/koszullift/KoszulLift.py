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
import sys
from typing import Optional, Tuple

import numpy as np

from koszullift.configuration import Configuration
from koszullift.kernel.datatypes.freecomplex import FreeComplex
from koszullift.kernel.datatypes.gradedring import GradedRing
from koszullift.kernel.datatypes.homotopyfamily import HomotopyFamily
from koszullift.kernel.datatypes.koszulindex import KoszulIndex
from koszullift.kernel.datatypes.productcomplex import ProductComplex
from koszullift.kernel.datatypes.report import CheckReport
from koszullift.kernel.datatypes.subtypes import Presentation
from koszullift.processor.algebra.complexes import check_complex, is_minimal, lift_to_Q
from koszullift.processor.algebra.koszul import check_regular_up_to, koszul_sign_checks
from koszullift.processor.construction import golden
from koszullift.processor.construction.assembly import (assemble, assemble_codim1, codimension_one_agreement, epsilon_C,
                                                        homology_comparison, minimality_and_lifting_report)
from koszullift.processor.construction.homotopy import (eisenbud_operator_checks, solve_homotopies,
                                                        verify_all_relations)
from koszullift.processor.construction.ranks import rank_report
from koszullift.processor.construction.resolve import resolve_over_R
from koszullift.processor.construction.sampling import perturb_lift, random_finite_complex, random_valid_input
from koszullift.processor.parallel import local_spark_context, set_default_threads, set_spark_context, thread_count

logger = logging.getLogger(__name__)

DEFAULT_DEGREE_BOUND = 8
REPORT_SCHEMA = 'koszul-lift/1'


class KoszulLift:
    def __init__(self, configuration_file: str = None):
        """
        Engine front: owns the configuration, the logging setup, the local Spark context and the pipelines
        :param configuration_file: path to a yml configuration file, defaults apply without one
        """
        self.configuration = Configuration(filepath=configuration_file)
        engine = self.configuration.section('engine')
        self.characteristic = int(engine.get('characteristic', 0))
        self.random_characteristic = int(engine.get('random_characteristic', 32003))
        self.degree_bound = int(engine.get('degree_bound', DEFAULT_DEGREE_BOUND))
        self.report_schema = self.configuration.section('report').get('schema', REPORT_SCHEMA)
        self.report_indent = int(self.configuration.section('report').get('indent', 2))
        set_default_threads(int(engine.get('threads', 1)))
        self.threads = thread_count()
        self.sc = local_spark_context(self.threads) if self.threads > 1 else None
        set_spark_context(self.sc)
        self._setup_logging(self.configuration.section('logging'))

    @staticmethod
    def _setup_logging(section: dict):
        root = logging.getLogger('koszullift')
        if not any(getattr(h, '_koszullift', False) for h in root.handlers):
            handler = logging.StreamHandler(sys.stderr)
            handler._koszullift = True
            root.addHandler(handler)
        for handler in root.handlers:
            if getattr(handler, '_koszullift', False):
                handler.setFormatter(logging.Formatter(section.get('format', '%(name)s %(levelname)s %(message)s')))
        root.setLevel(section.get('level', 'WARNING'))

    def lift(self, C: FreeComplex, level: int = None) -> Tuple[FreeComplex, HomotopyFamily]:
        """
        :param C: complex over R
        :param level: homotopy level, the codimension when omitted
        :return: (the lift F, its homotopy family)
        """
        level = C.ring.codimension if level is None else level
        F = lift_to_Q(C)
        logger.info('Lifted %s, solving homotopies to level %d', C, level)
        return F, solve_homotopies(F, level)

    def assemble(self, C: FreeComplex) -> Tuple[FreeComplex, HomotopyFamily, ProductComplex]:
        F, H = self.lift(C)
        return F, H, assemble(F, H)

    def verify(self, C: FreeComplex, degree_bound: int = None, dim_q: int = None) -> CheckReport:
        """
        Every check the construction admits on one input: the complex itself, the homotopy relations, the
        assembled differential, homology, ranks, Eisenbud operators, the projection onto C and minimality

        :param C: complex over R
        :param degree_bound: internal degree bound for homology
        :param dim_q: dim Q, enables the rank transfer checks
        :return: CheckReport named 'verify'
        """
        bound = self.degree_bound if degree_bound is None else degree_bound
        children = [check_complex(C)]
        if not children[0].passed:
            return CheckReport.aggregate('verify', children)
        F, H, P = self.assemble(C)
        return CheckReport.aggregate('verify', children + self._assembly_checks(C, F, H, P, bound, dim_q),
                                     data={'window': list(P.window), 'input_window': list(C.window),
                                           'c': C.ring.codimension})

    @staticmethod
    def _assembly_checks(C: FreeComplex, F: FreeComplex, H: HomotopyFamily, P: ProductComplex, bound: int,
                         dim_q: Optional[int]):
        checks = [verify_all_relations(H),
                  CheckReport.aggregate('assembled_square_zero', [check_complex(P.complex)]),
                  homology_comparison(P, C, bound),
                  rank_report(P, C, dim_q=dim_q),
                  epsilon_C(P, C)[1],
                  minimality_and_lifting_report(P, H)]
        if H.level >= 1:
            checks.append(eisenbud_operator_checks(H))
        if C.ring.codimension == 1:
            checks.append(codimension_one_agreement(F, H, P))
        return checks

    def resolve(self, M: Presentation, homological_bound: int, degree_bound: int = None) -> Tuple[FreeComplex,
                                                                                                   CheckReport]:
        bound = self.degree_bound if degree_bound is None else degree_bound
        C = resolve_over_R(M, homological_bound, bound)
        minimal = CheckReport.passing('minimal') if is_minimal(C) else \
            CheckReport.failing('minimal', 'the resolution has a unit entry')
        betti = {str(n): C.rank(n) for n in C.degrees}
        return C, CheckReport.aggregate('resolve', [check_complex(C), minimal], data={'betti': betti,
                                                                                   'caveat': C.caveat})

    def regularity(self, ring: GradedRing, degree_bound: int = None) -> CheckReport:
        bound = self.degree_bound if degree_bound is None else degree_bound
        return CheckReport.aggregate('regularity', [check_regular_up_to(ring, bound), koszul_sign_checks(ring)])

    def example(self, name: str, verify: bool = False) -> Tuple[ProductComplex, CheckReport]:
        """
        The built-in worked example: homotopies and the two summand assembly compared with the stored
        matrices, optionally followed by the full verification
        """
        ring, C = golden.example(name, self.characteristic)
        F, H = self.lift(C)
        P = assemble_codim1(F, H)
        children = [_compare_homotopy(H, golden.expected_homotopy(ring)), _compare_display(P, ring),
                    epsilon_C(P, C)[1]]
        if verify:
            children.append(self.verify(C, degree_bound=min(self.degree_bound, 8)))
        return P, CheckReport.aggregate('example', children, data={'name': name, 'window': list(P.window)})

    def suite(self, seed: int = 0, count: int = 10, degree_bound: int = 6) -> CheckReport:
        """
        Randomized property suite over F_p: square zero, homology, ranks and operators on random resolutions,
        homology invariance under a perturbed lift, and the 2^c total rank factor on finite complexes
        """
        rng = np.random.default_rng(seed)
        children = []
        for k in range(count):
            sample = random_valid_input(rng, characteristic=self.random_characteristic)
            C = sample.complex
            F, H, P = self.assemble(C)
            bound = min(degree_bound, sample.degree_bound)
            checks = self._assembly_checks(C, F, H, P, bound, None)
            perturbed = perturb_lift(F, rng)
            P2 = assemble(perturbed, solve_homotopies(perturbed, perturbed.ring.codimension))
            checks.append(_named(homology_comparison(P2, C, bound), 'perturbed_lift_homology'))
            finite = random_finite_complex(rng, sample.ring)
            _, _, Pf = self.assemble(finite)
            checks.append(_named(rank_report(Pf, finite), 'finite_complex_ranks'))
            children.append(CheckReport.aggregate('sample[%d]' % k, checks,
                                                  data={'ring': str(sample.ring),
                                                        'ranks': [C.rank(n) for n in C.degrees]}))
        return CheckReport.aggregate('suite', children, data={'seed': seed, 'count': count})


def _named(report: CheckReport, name: str) -> CheckReport:
    return CheckReport(name, report.outcome, report.location, report.detail, report.children, report.data)


def _compare_homotopy(H: HomotopyFamily, expected) -> CheckReport:
    e = KoszulIndex.of(1)
    for n, matrix in sorted(expected.items()):
        if H.map(e, n) != matrix:
            position = (H.map(e, n) - matrix).first_nonzero()
            return CheckReport.failing('homotopy_matches_example', 't^e_%d differs from the stored matrix' % n,
                                       location={'n': n, 'row': position[0], 'col': position[1]})
    return CheckReport.passing('homotopy_matches_example', data={'positions': sorted(expected)})


def _compare_display(P: ProductComplex, ring: GradedRing) -> CheckReport:
    displayed = P.displayed()
    if tuple(P.window) != golden.EXPECTED_WINDOW:
        return CheckReport.failing('assembly_matches_example', 'window %s, expected %s'
                                   % (list(P.window), list(golden.EXPECTED_WINDOW)))
    for m, (matrix, _, _) in sorted(golden.expected_display(ring).items()):
        if displayed.differential(m) != matrix:
            difference = displayed.differential(m) - matrix if displayed.differential(m).shape == matrix.shape \
                else None
            position = difference.first_nonzero() if difference is not None else (0, 0)
            return CheckReport.failing('assembly_matches_example', 'd_%d differs from the stored matrix' % m,
                                       location={'n': m, 'row': position[0], 'col': position[1]})
    return CheckReport.passing('assembly_matches_example', data={'parity_offset': golden.DISPLAY_PARITY_OFFSET})
