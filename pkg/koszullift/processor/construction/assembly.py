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
from typing import Dict, List, Mapping, Optional, Tuple, Union

from koszullift.kernel.datatypes.enumerations import Over, Verdict
from koszullift.kernel.datatypes.freecomplex import FreeComplex
from koszullift.kernel.datatypes.homotopyfamily import HomotopyFamily
from koszullift.kernel.datatypes.koszulindex import KoszulIndex, ONE
from koszullift.kernel.datatypes.polymatrix import PolyMatrix
from koszullift.kernel.datatypes.productcomplex import Block, ProductComplex
from koszullift.kernel.datatypes.report import CheckReport
from koszullift.kernel.datatypes.subtypes import ChainMorphism
from koszullift.kernel.exceptions import LevelTooLowError, WindowError, WrongCodimensionError
from koszullift.processor.algebra.complexes import (first_difference_mod_sequence, homology_dims, interior_degrees,
                                                 is_minimal, reduce_to_R)
from koszullift.processor.algebra.koszul import koszul_differential, parity_sign, wedge

logger = logging.getLogger(__name__)


def product_window(F: FreeComplex) -> Tuple[int, int]:
    """
    Degrees n for which every summand F_{n-j} (x) K_j, 0 <= j <= c, is known
    """
    c = F.ring.codimension
    lo = F.lo if F.bounded_below else F.lo + c
    hi = F.hi + c if F.bounded_above else F.hi
    if lo > hi:
        raise WindowError('The window [%d, %d] is too short for codimension %d' % (F.lo, F.hi, c))
    return lo, hi


def _layout(F: FreeComplex) -> Tuple[Tuple[int, int], Dict[int, List[Block]], Dict[int, List[int]]]:
    ring = F.ring
    c = ring.codimension
    window = product_window(F)
    blocks, twists = {}, {}
    for n in range(window[0], window[1] + 1):
        blocks[n], twists[n] = [], []
        for alpha in KoszulIndex.basis(c):
            p = n - alpha.degree
            shift = sum(ring.sequence_degrees[i - 1] for i in alpha)
            start = len(twists[n])
            twists[n].extend(a + shift for a in F.twists(p))
            blocks[n].append(Block(alpha.degree, alpha, p, start, len(twists[n])))
    return window, blocks, twists


def _block_index(blocks: List[Block], alpha: KoszulIndex) -> int:
    for k, b in enumerate(blocks):
        if b.alpha == alpha:
            return k
    raise KeyError(alpha)


def assemble(F: FreeComplex, H: HomotopyFamily) -> ProductComplex:
    """
    The complex F (x)_Q K with differential sum over alpha of t^alpha (x) s_alpha. On the summand x (x) y,
    x in F_p, it is sum over alpha != 0 disjoint from y of (-1)^(p|alpha|) t^alpha(x) (x) alpha^y,
    plus (-1)^p x (x) d^K(y).

    :param F: the lift
    :param H: homotopies of F solved to the codimension
    :return: ProductComplex over Q
    :raises LevelTooLowError: when H stops below the codimension
    """
    ring = F.ring
    c = ring.codimension
    if H.level < c:
        raise LevelTooLowError('Assembly needs homotopies up to level %d, got %d' % (c, H.level))
    window, blocks, twists = _layout(F)
    logger.info('Assembling F (x) K on [%d, %d] from F on [%d, %d], c=%d', window[0], window[1], F.lo, F.hi, c)

    diffs, provenance = {}, {}
    for n in range(window[0] + 1, window[1] + 1):
        sources, targets = blocks[n], blocks[n - 1]
        parts = {}

        def add(key, matrix, label):
            parts[key] = parts[key] + matrix if key in parts else matrix
            provenance.setdefault((n,) + key, ())
            provenance[(n,) + key] += (label,)

        for s, block in enumerate(sources):
            y, p = block.alpha, block.p
            for alpha in KoszulIndex.basis(c):
                if not alpha.disjoint(y):
                    continue
                index, sign = wedge(alpha, y)
                sign *= parity_sign(p * alpha.degree)
                matrix = H.map(alpha, p)
                add((s, _block_index(targets, index)), matrix if sign > 0 else -matrix,
                    'd' if alpha == ONE else 't^' + str(alpha))
            for coefficient, beta in koszul_differential(y, ring):
                scaled = PolyMatrix.scalar(ring, F.rank(p), coefficient)
                add((s, _block_index(targets, beta)), scaled if p % 2 == 0 else -scaled, 'dK')
        diffs[n] = PolyMatrix.from_blocks(ring, [b.size for b in targets], [b.size for b in sources],
                                          {(t, s): m for (s, t), m in parts.items()})

    complex = FreeComplex(ring, Over.Q, window, twists, diffs, bounded_below=F.bounded_below,
                          bounded_above=F.bounded_above, caveat=F.caveat)
    return ProductComplex(complex, blocks, provenance, H)


def _as_family(F: FreeComplex, t_e: Union[HomotopyFamily, Mapping[int, PolyMatrix]]) -> HomotopyFamily:
    if isinstance(t_e, HomotopyFamily):
        return t_e
    return HomotopyFamily(F, {KoszulIndex.of(1): dict(t_e)}, 1)


def assemble_codim1(F: FreeComplex, t_e: Union[HomotopyFamily, Mapping[int, PolyMatrix]]) -> ProductComplex:
    """
    Codimension one: (F (x) K)_{n+1} = F_n (+) F_{n+1} with differential
    [[d_n, (-1)^(n+1) t^e_{n+1}], [(-1)^n f, d_{n+1}]], written with the K_1 summand first
    and returned in canonical generator order.

    :param F: the lift
    :param t_e: the level one homotopy, as a family or as n -> matrix
    :return: ProductComplex
    :raises WrongCodimensionError: unless c = 1
    """
    ring = F.ring
    if ring.codimension != 1:
        raise WrongCodimensionError('The two summand form needs c = 1, got c = %d' % ring.codimension)
    H = _as_family(F, t_e)
    e = KoszulIndex.of(1)
    f = ring.sequence[0]
    window, blocks, twists = _layout(F)
    product = ProductComplex(FreeComplex(ring, Over.Q, window, twists, bounded_below=F.bounded_below,
                                         bounded_above=F.bounded_above, caveat=F.caveat), blocks, {}, H)

    diffs, provenance = {}, {}
    for m in range(window[0] + 1, window[1] + 1):
        n = m - 1
        displayed = PolyMatrix.from_blocks(
            ring, [F.rank(n - 1), F.rank(n)], [F.rank(n), F.rank(n + 1)],
            {(0, 0): F.differential(n),
             (0, 1): H.map(e, n + 1) if n % 2 else -H.map(e, n + 1),
             (1, 0): PolyMatrix.scalar(ring, F.rank(n), f if n % 2 == 0 else -f),
             (1, 1): F.differential(n + 1)})
        diffs[m] = product.to_canonical(m, displayed)
        k1, k0 = _block_index(blocks[m], e), _block_index(blocks[m], ONE)
        t1, t0 = _block_index(blocks[m - 1], e), _block_index(blocks[m - 1], ONE)
        provenance.update({(m, k1, t1): ('d',), (m, k0, t1): ('t^' + str(e),),
                           (m, k1, t0): ('dK',), (m, k0, t0): ('d',)})
    complex = FreeComplex(ring, Over.Q, window, twists, diffs, bounded_below=F.bounded_below,
                          bounded_above=F.bounded_above, caveat=F.caveat)
    return ProductComplex(complex, blocks, provenance, H)


def epsilon_C(P: ProductComplex, C: FreeComplex) -> Tuple[ChainMorphism, CheckReport]:
    """
    The projection (P (x)_Q R)_n -> C_n onto the copy F_n (x) K_0, with a check that it commutes with
    the differentials over R

    :param P: assembly of a lift of C
    :param C: the complex over R
    :return: (ChainMorphism, CheckReport)
    """
    ring = C.ring
    source = reduce_to_R(P.complex)
    degrees = [n for n in P.complex.degrees if C.has_module(n)]
    maps = {}
    for n in degrees:
        block = P.k0_block(n)
        rows = [[ring.one if col == block.start + row else ring.zero for col in range(P.rank(n))]
                for row in range(C.rank(n))]
        maps[n] = PolyMatrix(ring, rows, (C.rank(n), P.rank(n)))
    morphism = ChainMorphism(source, C, maps)

    for n in degrees:
        if n - 1 not in maps:
            continue
        left = C.differential(n) @ maps[n]
        right = maps[n - 1] @ P.differential(n)
        position = first_difference_mod_sequence(left, right)
        if position is not None:
            return morphism, CheckReport.failing('epsilon_chain_map', 'd eps != eps d over R',
                                                 location={'n': n, 'row': position[0], 'col': position[1]})
    return morphism, CheckReport.passing('epsilon_chain_map', data={'degrees': degrees})


def lifting_verdict(H: HomotopyFamily) -> Verdict:
    c = H.ring.codimension
    if c == 0 or all(H.map(KoszulIndex.of(i), n).is_zero()
                     for i in range(1, c + 1) for n in H.positions(KoszulIndex.of(i))):
        return Verdict.LIFTS
    return Verdict.NOT_LIFTS


def _is_two_periodic(C: FreeComplex) -> bool:
    degrees = list(range(C.lo + 1, C.hi + 1))
    if len(degrees) < 2:
        return False
    return all(C.differential(n) == C.differential(n + 2) for n in degrees if n + 2 <= C.hi)


def matrix_factorization_verdict(F: FreeComplex) -> Optional[Verdict]:
    """
    For c = 1 and a 2-periodic F: do consecutive differentials compose to f times the identity over Q
    :return: a Verdict, None when the question does not apply
    """
    ring = F.ring
    if ring.codimension != 1 or not _is_two_periodic(F):
        return None
    f = ring.sequence[0]
    for n in range(F.lo + 2, F.hi + 1):
        if F.differential(n - 1) @ F.differential(n) != PolyMatrix.scalar(ring, F.rank(n), f):
            return Verdict.NOT_MATRIX_FACTORIZATION
    return Verdict.MATRIX_FACTORIZATION


def minimality_and_lifting_report(P: ProductComplex, H: HomotopyFamily) -> CheckReport:
    """
    Minimality of the assembly, whether the module lifts to Q (all t^{e_i} vanish), and for c = 1 with a
    2-periodic input whether the lift is a matrix factorization of f
    """
    data = {'minimal': is_minimal(P.complex), 'lifting': lifting_verdict(H).value}
    verdict = matrix_factorization_verdict(H.base)
    if verdict is not None:
        data['matrix_factorization'] = verdict.value
    return CheckReport.passing('minimality_and_lifting', data=data)


def codimension_one_agreement(F: FreeComplex, H: HomotopyFamily, P: ProductComplex) -> CheckReport:
    """
    The two summand form and the general assembly agree entrywise in canonical order
    """
    two_summand = assemble_codim1(F, H)
    for n in range(P.window[0] + 1, P.window[1] + 1):
        position = (two_summand.differential(n) - P.differential(n)).first_nonzero()
        if position is not None:
            return CheckReport.failing('codimension_one_form', 'two summand form differs from the assembly',
                                       location={'n': n, 'row': position[0], 'col': position[1]})
    return CheckReport.passing('codimension_one_form', data={'window': list(P.window)})


def homology_comparison(P: ProductComplex, C: FreeComplex, bound: int) -> CheckReport:
    """
    dim_k H_n(P)_d over Q against dim_k H_n(C)_d over R, for the degrees interior to both windows
    and internal degrees up to the bound
    """
    name = 'homology_preservation'
    degrees = [n for n in interior_degrees(P.complex) if n in set(interior_degrees(C))]
    if not degrees:
        logger.warning('No homological degree is interior to both windows, homology is not compared')
        return CheckReport.passing(name, data={'degrees': [], 'degree_bound': bound})
    over_Q = homology_dims(P.complex, degrees, bound)
    over_R = homology_dims(C, degrees, bound)
    for n, d in sorted(set(over_Q) | set(over_R)):
        if over_Q[(n, d)] != over_R[(n, d)]:
            return CheckReport.failing(name, 'dim H_%d(P)_%d = %d but dim H_%d(C)_%d = %d'
                                       % (n, d, over_Q[(n, d)], n, d, over_R[(n, d)]), location={'n': n, 'd': d})
    return CheckReport.passing(name, data={'degrees': degrees, 'degree_bound': bound, 'dims': over_R.to_json()})
