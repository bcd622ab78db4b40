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

from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.special import comb

from koszullift.kernel.datatypes.freecomplex import FreeComplex
from koszullift.kernel.datatypes.productcomplex import ProductComplex
from koszullift.kernel.datatypes.report import CheckReport


def binomials(c: int) -> np.ndarray:
    return np.array([comb(c, i, exact=True) for i in range(c + 1)], dtype=np.int64)


def expected_ranks(C: FreeComplex, c: int, window: Tuple[int, int]) -> Dict[int, int]:
    """
    sum_i C(c, i) rank C_{n-i} for every n in the window, as a convolution of the rank vector of C
    with the binomial row
    """
    lo, hi = window
    ranks = np.array([C.rank(m) for m in range(lo - c, hi + 1)], dtype=np.int64)
    convolved = np.convolve(ranks, binomials(c))
    return {n: int(convolved[n - lo + c]) for n in range(lo, hi + 1)}


def vandermonde_identity(c: int, d: int, n: int) -> Tuple[int, int]:
    """
    :return: (sum_i C(c, i) C(d - c, n - i), C(d, n)); equal whenever 0 <= c <= d
    """
    if not 0 <= c <= d:
        raise ValueError('Need 0 <= c <= d, got c=%d, d=%d' % (c, d))
    left = sum(comb(c, i, exact=True) * comb(d - c, n - i, exact=True) for i in range(c + 1) if n - i >= 0)
    return left, comb(d, n, exact=True) if n >= 0 else 0


def total_rank_transfer(total_C: int, total_P: int, c: int, d: int) -> Dict[str, object]:
    """
    Instance of: sum rank C < 2^(d-c) implies sum rank P < 2^d
    """
    premise = total_C < 2 ** (d - c) if d >= c else False
    conclusion = total_P < 2 ** d
    return {'dim_q': d, 'premise': premise, 'conclusion': conclusion, 'holds': (not premise) or conclusion}


def binomial_bounds(C: FreeComplex, P: ProductComplex, d: int) -> List[Dict[str, object]]:
    """
    Per n: if rank C_{n-i} >= C(d-c, n-i) for i = 0..c then rank P_n >= C(d, n)
    """
    c = P.codimension
    rows = []
    for n in P.complex.degrees:
        premise = all(C.rank(n - i) >= (comb(d - c, n - i, exact=True) if n - i >= 0 else 0)
                      for i in range(c + 1))
        conclusion = P.rank(n) >= (comb(d, n, exact=True) if n >= 0 else 0)
        rows.append({'n': n, 'premise': premise, 'conclusion': conclusion, 'holds': (not premise) or conclusion})
    return rows


def rank_report(P: ProductComplex, C: FreeComplex, dim_q: Optional[int] = None,
                vandermonde: Optional[Tuple[int, int, int]] = None) -> CheckReport:
    """
    Rank accounting of an assembly against the complex over R

    :param P: the assembly
    :param C: the complex over R it was built from
    :param dim_q: dim Q, enables the total-rank transfer and binomial checks
    :param vandermonde: optional (c, d, n) to evaluate the Vandermonde identity at
    :return: CheckReport
    """
    c = P.codimension
    window = P.window
    children = []

    expected = expected_ranks(C, c, window)
    actual = {n: P.rank(n) for n in P.complex.degrees}
    mismatch = [n for n in actual if actual[n] != expected[n]]
    if mismatch:
        n = mismatch[0]
        children.append(CheckReport.failing('rank_per_degree', 'rank P_%d = %d, expected %d' % (n, actual[n], expected[n]),
                                            location={'n': n}))
    else:
        children.append(CheckReport.passing('rank_per_degree', data={'ranks': {str(n): r for n, r in actual.items()}}))

    total_P = sum(actual.values())
    finite = C.bounded_below and C.bounded_above
    total_C = C.total_rank()
    if finite:
        if total_P != 2 ** c * total_C:
            children.append(CheckReport.failing('total_rank', 'total rank %d != 2^%d * %d' % (total_P, c, total_C)))
        else:
            children.append(CheckReport.passing('total_rank', data={'total_P': total_P, 'total_C': total_C,
                                                                    'factor': 2 ** c}))

    if vandermonde is not None:
        left, right = vandermonde_identity(*vandermonde)
        name = 'vandermonde'
        data = {'c': vandermonde[0], 'd': vandermonde[1], 'n': vandermonde[2], 'sum': left, 'binomial': right}
        children.append(CheckReport.passing(name, data=data) if left == right
                        else CheckReport.failing(name, '%d != %d' % (left, right), data=data))

    if dim_q is not None:
        if finite:
            transfer = total_rank_transfer(total_C, total_P, c, dim_q)
            children.append(CheckReport.passing('total_rank_transfer', data=transfer) if transfer['holds'] else
                            CheckReport.failing('total_rank_transfer', 'premise holds, conclusion fails', data=transfer))
        rows = binomial_bounds(C, P, dim_q)
        broken = [row for row in rows if not row['holds']]
        if broken:
            children.append(CheckReport.failing('binomial_bounds', 'rank P_%d below C(%d, %d)'
                                                % (broken[0]['n'], dim_q, broken[0]['n']),
                                                location={'n': broken[0]['n']}))
        else:
            children.append(CheckReport.passing('binomial_bounds', data={'rows': rows}))
    return CheckReport.aggregate('rank_report', children, data={'c': c, 'window': list(window)})
