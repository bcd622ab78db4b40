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
from itertools import combinations
from typing import Dict, List, NamedTuple, Tuple

from koszullift.kernel.datatypes.enumerations import LinearSystemStatus, Over
from koszullift.kernel.datatypes.freecomplex import FreeComplex
from koszullift.kernel.datatypes.homotopyfamily import HomotopyFamily
from koszullift.kernel.datatypes.koszulindex import KoszulIndex, ONE
from koszullift.kernel.datatypes.polymatrix import PolyMatrix
from koszullift.kernel.datatypes.report import CheckReport
from koszullift.kernel.exceptions import InvalidInputError
from koszullift.processor.algebra.complexes import first_difference_mod_sequence
from koszullift.processor.algebra.koszul import insertion_count, inversions, parity_sign
from koszullift.processor.algebra.linear import LinearConstraint, solve_graded_linear
from koszullift.processor.parallel import parallel_map
from koszullift.processor.preprocessor.serializer import format_polynomial

logger = logging.getLogger(__name__)


class ProductTerm(NamedTuple):
    """sign * t^beta t^alpha"""
    sign: int
    alpha: KoszulIndex
    beta: KoszulIndex


class SequenceTerm(NamedTuple):
    """sign * f_i t^index"""
    sign: int
    i: int
    index: KoszulIndex


def product_terms(gamma: KoszulIndex) -> List[ProductTerm]:
    """
    The quadratic part of the homotopy relation at gamma:
    sum over alpha ^ beta = +-gamma of (-1)^(|beta| + (alpha beta)) t^beta t^alpha
    """
    terms = []
    for size in range(gamma.degree + 1):
        for subset in combinations(gamma.subset, size):
            alpha = KoszulIndex(subset)
            beta = KoszulIndex(i for i in gamma if i not in alpha)
            terms.append(ProductTerm(parity_sign(beta.degree + inversions(alpha.subset + beta.subset)), alpha, beta))
    return terms


def sequence_terms(gamma: KoszulIndex, c: int) -> List[SequenceTerm]:
    """
    The linear part of the homotopy relation at gamma:
    sum over i not in gamma of (-1)^(|gamma| + (e_i gamma)) f_i t^[e_i gamma]
    """
    return [SequenceTerm(parity_sign(gamma.degree + insertion_count(i, gamma)), i,
                         KoszulIndex(sorted(gamma.subset + (i,))))
            for i in range(1, c + 1) if i not in gamma]


def relation_positions(H: HomotopyFamily, gamma: KoszulIndex) -> List[int]:
    """
    Source degrees n at which the relation at gamma has both ends F_n and F_{n-|gamma|-2} inside the window
    """
    base = H.base
    return list(range(base.lo + gamma.degree + 2, base.hi + 1))


def quadratic_part(H: HomotopyFamily, gamma: KoszulIndex, n: int) -> PolyMatrix:
    ring = H.ring
    base = H.base
    result = PolyMatrix.zeros(ring, base.rank(n - gamma.degree - 2), base.rank(n))
    for term in product_terms(gamma):
        middle = n - term.alpha.degree - 1
        composite = H.map(term.beta, middle) @ H.map(term.alpha, n)
        result = result + composite if term.sign > 0 else result - composite
    return result


def relation_value(H: HomotopyFamily, gamma: KoszulIndex, n: int) -> PolyMatrix:
    """
    Left hand side of the homotopy relation at gamma, as a map F_n -> F_{n-|gamma|-2}
    """
    ring = H.ring
    result = quadratic_part(H, gamma, n)
    for term in sequence_terms(gamma, ring.codimension):
        summand = H.map(term.index, n).scaled(ring.sequence[term.i - 1])
        result = result + summand if term.sign > 0 else result - summand
    return result


def _solve_entry(H: HomotopyFamily, level: int, residuals: Dict[Tuple[KoszulIndex, int], PolyMatrix],
                 task: Tuple[int, int, int]):
    n, row, col = task
    ring = H.ring
    c = ring.codimension
    unknowns = {mu: H.entry_degree(mu, n, row, col) for mu in KoszulIndex.basis(c, level + 1)}
    constraints = []
    for gamma in KoszulIndex.basis(c, level):
        terms = [(ring.sequence[t.i - 1] * t.sign, t.index) for t in sequence_terms(gamma, c)]
        constraints.append(LinearConstraint(terms, -residuals[(gamma, n)][row, col]))
    solution = solve_graded_linear(ring, unknowns, constraints)
    if solution is LinearSystemStatus.INCONSISTENT:
        raise InvalidInputError('No homotopy of level %d exists at n=%d, entry (%d, %d): the input is not a lift '
                                'of a complex over R or f is not a regular sequence' % (level + 1, n, row, col))
    return solution


def solve_homotopies(F: FreeComplex, level: int) -> HomotopyFamily:
    """
    Solve the homotopy relation level by level, all maps t^mu with |mu| = d+1 at once from the relations
    at every gamma with |gamma| = d. Free coordinates are set to zero.

    :param F: a lift over Q
    :param level: the largest |alpha| to solve, at most the codimension
    :return: HomotopyFamily
    :raises InvalidInputError: when a level cannot be solved
    """
    c = F.ring.codimension
    if F.over is not Over.Q:
        raise ValueError('Homotopies are solved on a lift over Q, got a complex over %s' % F.over.value)
    if level < 0 or level > c:
        raise ValueError('Level %d outside 0..%d' % (level, c))

    maps = {}
    family = HomotopyFamily(F, maps, 0)
    for d in range(level):
        positions = list(range(F.lo + d + 2, F.hi + 1))
        residuals = {(gamma, n): quadratic_part(family, gamma, n)
                     for gamma in KoszulIndex.basis(c, d) for n in positions}
        tasks = [(n, row, col) for n in positions
                 for row in range(F.rank(n - d - 2)) for col in range(F.rank(n))]
        logger.info('Solving level %d: %d entry systems over %d positions', d + 1, len(tasks), len(positions))
        solutions = parallel_map(lambda task: _solve_entry(family, d, residuals, task), tasks)

        entries = {}
        for (n, row, col), solution in zip(tasks, solutions):
            for mu, value in solution.items():
                if value:
                    entries.setdefault((mu, n), {})[(row, col)] = value
        for mu in KoszulIndex.basis(c, d + 1):
            maps[mu] = {}
            for n in positions:
                rows = [[F.ring.zero] * F.rank(n) for _ in range(F.rank(n - d - 2))]
                for (row, col), value in entries.get((mu, n), {}).items():
                    rows[row][col] = value
                maps[mu][n] = PolyMatrix(F.ring, rows, (F.rank(n - d - 2), F.rank(n)))
        family = HomotopyFamily(F, maps, d + 1)
    return family


def verify_relation(H: HomotopyFamily, gamma: KoszulIndex) -> CheckReport:
    """
    Evaluate the homotopy relation at gamma exactly over Q at every position inside the window
    :param H:
    :param gamma: basis element, not ZERO, with |gamma| < level unless the family is complete
    :return: CheckReport
    """
    c = H.ring.codimension
    if gamma.is_zero:
        raise ValueError('The relation is not defined at 0')
    if not (gamma.degree < H.level or (gamma.degree == H.level == c)):
        raise ValueError('Relation at %s needs a family of level above %d' % (gamma, H.level))
    name = 'verify_relation[%s]' % gamma
    for n in relation_positions(H, gamma):
        value = relation_value(H, gamma, n)
        position = value.first_nonzero()
        if position is not None:
            return CheckReport.failing(name, 'left hand side has entry %s'
                                       % format_polynomial(value[position], H.ring),
                                       location={'gamma': str(gamma), 'n': n, 'row': position[0], 'col': position[1]})
    return CheckReport.passing(name, data={'positions': relation_positions(H, gamma)})


def verify_all_relations(H: HomotopyFamily) -> CheckReport:
    c = H.ring.codimension
    gammas = [gamma for gamma in KoszulIndex.basis(c)
              if gamma.degree < H.level or gamma.degree == H.level == c]
    return CheckReport.aggregate('homotopy_relations', [verify_relation(H, gamma) for gamma in gammas])


def _commutation_sign(i: int, j: int) -> int:
    """
    Read off s with [t^{e_i}, t^{e_j}] = s (d h + h d) modulo (f), h = t^{e_i^e_j}, from the relation at e_i^e_j
    """
    gamma = KoszulIndex.of(i, j)
    coefficient = {(t.alpha, t.beta): t.sign for t in product_terms(gamma)}
    e_i, e_j = KoszulIndex.of(i), KoszulIndex.of(j)
    ij = coefficient[(e_j, e_i)]
    if coefficient[(e_i, e_j)] != -ij or coefficient[(gamma, ONE)] != coefficient[(ONE, gamma)]:
        raise ArithmeticError('Unexpected sign pattern in the relation at %s' % gamma)
    return -coefficient[(gamma, ONE)] * ij


def eisenbud_operator_checks(H: HomotopyFamily) -> CheckReport:
    """
    Over R: each t^{e_i} is a chain map of degree -2, and for i < j the commutator of t^{e_i} and t^{e_j}
    is the boundary of t^{e_i^e_j} with the sign dictated by the relation at e_i^e_j

    :param H: family of level >= 1
    :return: CheckReport with one child per operator and per pair
    """
    base = H.base
    c = H.ring.codimension
    if H.level < 1:
        raise ValueError('Eisenbud operators need a family of level at least 1')
    children = []
    for i in range(1, c + 1):
        e_i = KoszulIndex.of(i)
        name = 'chain_map[e%d]' % i
        report = CheckReport.passing(name)
        for n in range(base.lo + 3, base.hi + 1):
            left = H.map(e_i, n - 1) @ base.differential(n)
            right = base.differential(n - 2) @ H.map(e_i, n)
            position = first_difference_mod_sequence(left, right)
            if position is not None:
                report = CheckReport.failing(name, 't d != d t over R', location={'n': n, 'row': position[0],
                                                                                    'col': position[1]})
                break
        children.append(report)

    if H.level >= 2:
        for i, j in combinations(range(1, c + 1), 2):
            e_i, e_j, gamma = KoszulIndex.of(i), KoszulIndex.of(j), KoszulIndex.of(i, j)
            sign = _commutation_sign(i, j)
            name = 'commutation[e%d,e%d]' % (i, j)
            report = CheckReport.passing(name, data={'sign': sign})
            for n in range(base.lo + 4, base.hi + 1):
                commutator = H.map(e_i, n - 2) @ H.map(e_j, n) - H.map(e_j, n - 2) @ H.map(e_i, n)
                boundary = base.differential(n - 3) @ H.map(gamma, n) + H.map(gamma, n - 1) @ base.differential(n)
                position = first_difference_mod_sequence(commutator, boundary if sign > 0 else -boundary)
                if position is not None:
                    report = CheckReport.failing(name, 'commutator differs from the boundary of t^%s' % gamma,
                                                 location={'n': n, 'row': position[0], 'col': position[1]},
                                                 data={'sign': sign})
                    break
            children.append(report)
    return CheckReport.aggregate('eisenbud_operators', children, data={'c': c, 'level': H.level})
