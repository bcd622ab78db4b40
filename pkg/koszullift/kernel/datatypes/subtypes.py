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

from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from koszullift.kernel.datatypes.freecomplex import FreeComplex
from koszullift.kernel.datatypes.gradedring import GradedRing
from koszullift.kernel.datatypes.polymatrix import PolyMatrix


class GradedDims:
    def __init__(self, dims: Dict[Tuple[int, int], int] = None):
        """
        dim_k of a bigraded vector space, keyed by (homological degree n, internal degree d)
        :param dims: (n, d) -> dimension
        """
        dims = dict(dims or {})
        for key, value in dims.items():
            if value < 0:
                raise ValueError('Negative dimension %d at %s' % (value, key))
        self._dims = dims

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return self._dims.get(key, 0)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self._dims))

    def __len__(self):
        return len(self._dims)

    def items(self) -> List[Tuple[Tuple[int, int], int]]:
        return sorted(self._dims.items())

    def support(self) -> List[Tuple[int, int]]:
        return [key for key, value in self.items() if value]

    def is_zero(self) -> bool:
        return not self.support()

    def strand(self, n: int) -> Dict[int, int]:
        return {d: v for (m, d), v in self.items() if m == n}

    def to_json(self) -> Dict[str, Dict[str, int]]:
        result = {}
        for (n, d), value in self.items():
            result.setdefault(str(n), {})[str(d)] = value
        return result

    def __eq__(self, other):
        if not isinstance(other, GradedDims):
            return NotImplemented
        return self.support() == other.support() and all(self[k] == other[k] for k in self.support())

    def __repr__(self):
        return 'GradedDims(%s)' % {k: v for k, v in self.items() if v}


class Presentation:
    def __init__(self,
                 ring: GradedRing,
                 twists: Sequence[int],
                 relations: PolyMatrix = None,
                 relation_twists: Sequence[int] = ()):
        """
        A graded module M = coker(R(-b) -> R(-a)) over R

        :param ring:
        :param twists: generator degrees a of M
        :param relations: matrix whose columns are the relations, rows indexed by the generators
        :param relation_twists: degrees b of the relations, one per column
        """
        twists = tuple(int(a) for a in twists)
        relation_twists = tuple(int(b) for b in relation_twists)
        if relations is None:
            relations = PolyMatrix.zeros(ring, len(twists), len(relation_twists))
        if relations.shape != (len(twists), len(relation_twists)):
            raise ValueError('Relation matrix has shape %s, expected %s'
                             % (relations.shape, (len(twists), len(relation_twists))))
        for i, j, p in relations.entries():
            if ring.homogeneous_degree(p) != relation_twists[j] - twists[i]:
                raise ValueError('Relation entry (%d, %d) = %s is not of degree %d'
                                 % (i, j, p, relation_twists[j] - twists[i]))
        self._ring = ring
        self._twists = twists
        self._relations = relations
        self._relation_twists = relation_twists

    @property
    def ring(self) -> GradedRing:
        return self._ring

    @property
    def twists(self) -> Tuple[int, ...]:
        return self._twists

    @property
    def relations(self) -> PolyMatrix:
        return self._relations

    @property
    def relation_twists(self) -> Tuple[int, ...]:
        return self._relation_twists

    def __repr__(self):
        return 'Presentation(twists=%s, relation_twists=%s)' % (list(self._twists), list(self._relation_twists))


class ChainMorphism:
    def __init__(self,
                 source: FreeComplex,
                 target: FreeComplex,
                 maps: Dict[int, PolyMatrix]):
        """
        Degreewise maps source_n -> target_n on the common window

        :param source:
        :param target:
        :param maps: n -> matrix of shape (rank target_n, rank source_n)
        """
        for n, matrix in maps.items():
            if matrix.shape != (target.rank(n), source.rank(n)):
                raise ValueError('Map in degree %d has shape %s' % (n, matrix.shape))
        self._source = source
        self._target = target
        self._maps = dict(maps)

    @property
    def source(self) -> FreeComplex:
        return self._source

    @property
    def target(self) -> FreeComplex:
        return self._target

    @property
    def degrees(self) -> List[int]:
        return sorted(self._maps)

    def map(self, n: int) -> PolyMatrix:
        return self._maps[n]


class JobSpec:
    INPUT_COMMANDS = ('lift', 'assemble', 'verify', 'resolve')

    def __init__(self,
                 command: str,
                 ring: GradedRing = None,
                 complex: FreeComplex = None,
                 presentation: Presentation = None,
                 level: int = None,
                 degree_bound: int = None,
                 homological_bound: int = None,
                 dim_q: int = None,
                 output_format: str = 'text',
                 seed: int = 0,
                 count: int = None,
                 example: str = None,
                 verify: bool = False):
        """
        One validated invocation of the engine
        """
        if complex is not None and presentation is not None:
            raise ValueError('Give either a complex or a presentation, not both')
        if command in self.INPUT_COMMANDS and complex is None and presentation is None:
            raise ValueError('Command %s needs --complex or --presentation' % command)
        if command == 'resolve' and presentation is None and complex is None:
            raise ValueError('Command resolve needs --presentation')
        if output_format not in ('text', 'json'):
            raise ValueError('Unknown output format %s' % output_format)
        for name, value in (('level', level), ('degree bound', degree_bound),
                            ('homological bound', homological_bound), ('dim Q', dim_q), ('count', count)):
            if value is not None and value < 0:
                raise ValueError('The %s must be non-negative, got %d' % (name, value))
        self.command = command
        self.ring = ring
        self.complex = complex
        self.presentation = presentation
        self.level = level
        self.degree_bound = degree_bound
        self.homological_bound = homological_bound
        self.dim_q = dim_q
        self.output_format = output_format
        self.seed = seed
        self.count = count
        self.example = example
        self.verify = verify

    @property
    def input(self) -> Optional[object]:
        return self.complex if self.complex is not None else self.presentation
