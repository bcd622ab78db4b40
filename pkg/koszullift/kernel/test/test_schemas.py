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

from marshmallow import ValidationError

from koszullift.kernel.datatypes.report import CheckReport
from koszullift.kernel.schemas.complexschema import ComplexSchema
from koszullift.kernel.schemas.presentationschema import PresentationSchema
from koszullift.kernel.schemas.reportschema import ReportSchema
from koszullift.kernel.schemas.ringschema import RingSchema


class TestRingSchema(unittest.TestCase):
    def test_defaults(self):
        data = RingSchema().load({'variables': ['x', 'y']})
        self.assertEqual(data['field'], 0)
        self.assertEqual(data['relations'], [])
        self.assertEqual(data['sequence'], [])

    def test_invalid(self):
        with self.assertRaises(ValidationError) as cm:
            RingSchema().load({'variables': ['x', 'x'], 'field': -3})
        self.assertIn('variables', cm.exception.messages)
        self.assertIn('field', cm.exception.messages)
        with self.assertRaises(ValidationError):
            RingSchema().load({'variables': []})
        with self.assertRaises(ValidationError):
            RingSchema().load({'variables': ['1x']})


class TestComplexSchema(unittest.TestCase):
    def test_load(self):
        data = ComplexSchema().load({'over': 'R', 'window': [0, 1], 'twists': {'0': [0], '1': [1]},
                                     'diffs': {'1': [['x']]}, 'bounded_below': True})
        self.assertEqual(data['twists'], {0: [0], 1: [1]})
        self.assertEqual(data['diffs'], {1: [['x']]})
        self.assertFalse(data['lift'])
        self.assertIsNone(data['caveat'])

    def test_constant_entries(self):
        data = ComplexSchema().load({'over': 'Q', 'window': [0, 1], 'twists': {'0': [0], '1': [0]},
                                     'diffs': {'1': [[1]]}})
        self.assertEqual(data['diffs'][1], [['1']])

    def test_window(self):
        with self.assertRaises(ValidationError) as cm:
            ComplexSchema().load({'over': 'R', 'window': [2, 1], 'twists': {}})
        self.assertIn('window', cm.exception.messages)
        with self.assertRaises(ValidationError) as cm:
            ComplexSchema().load({'over': 'R', 'window': [0, 2], 'twists': {'0': [0], '1': [1]}})
        self.assertIn('twists', cm.exception.messages)
        with self.assertRaises(ValidationError):
            ComplexSchema().load({'over': 'S', 'window': [0, 0], 'twists': {'0': []}})

    def test_bad_entries(self):
        with self.assertRaises(ValidationError):
            ComplexSchema().load({'over': 'R', 'window': [0, 1], 'twists': {'0': [0], '1': [1]},
                                  'diffs': {'1': [[True]]}})


class TestPresentationSchema(unittest.TestCase):
    def test_free_module(self):
        data = PresentationSchema().load({'twists': [0, 1]})
        self.assertEqual(data['relations'], [[], []])

    def test_shape(self):
        data = PresentationSchema().load({'twists': [0], 'relations': [['x', 'y']], 'relation_twists': [1, 1]})
        self.assertEqual(data['relation_twists'], [1, 1])
        with self.assertRaises(ValidationError):
            PresentationSchema().load({'twists': [0], 'relations': [['x']], 'relation_twists': [1, 1]})
        with self.assertRaises(ValidationError):
            PresentationSchema().load({'twists': [0], 'relations': [['x']]})


class TestReportSchema(unittest.TestCase):
    def test_dump(self):
        report = CheckReport.aggregate('verify', [CheckReport.passing('a', data={'rank': 3}),
                                                  CheckReport.failing('b', 'broken', location={'n': 1})])
        dumped = ReportSchema().dump(report)
        self.assertEqual(dumped['outcome'], 'FAIL')
        self.assertNotIn('location', dumped)
        self.assertEqual(dumped['children'][0], {'name': 'a', 'outcome': 'PASS', 'data': {'rank': 3}})
        self.assertEqual(dumped['children'][1]['location'], {'n': 1})
        self.assertEqual(dumped['children'][1]['detail'], 'broken')


if __name__ == '__main__':
    unittest.main()
