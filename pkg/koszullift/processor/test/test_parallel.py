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

import os
import unittest
from unittest import mock

from koszullift.KoszulLift import KoszulLift
from koszullift.processor import parallel
from koszullift.processor.parallel import (THREADS_VARIABLE, local_spark_context, parallel_map, set_default_threads,
                                           set_spark_context, spark_context, thread_count)


class _LocalRDD:
    """
    In-process stand-in for an RDD, collect() returns the mapped items in reverse order
    """

    def __init__(self, data):
        self.data = list(data)

    def map(self, func):
        return _LocalRDD(reversed([func(item) for item in self.data]))

    def collect(self):
        return self.data


class _LocalContext:
    def __init__(self):
        self.calls = []

    def parallelize(self, data, partitions):
        self.calls.append(partitions)
        return _LocalRDD(data)


class TestParallel(unittest.TestCase):
    def tearDown(self):
        set_default_threads(1)
        set_spark_context(None)

    def test_default(self):
        with mock.patch.dict(os.environ, {THREADS_VARIABLE: ''}):
            set_default_threads(3)
            self.assertEqual(thread_count(), 3)
        with self.assertRaises(ValueError):
            set_default_threads(0)

    def test_environment(self):
        with mock.patch.dict(os.environ, {THREADS_VARIABLE: '4'}):
            self.assertEqual(thread_count(), 4)
        for value in ('0', 'many'):
            with mock.patch.dict(os.environ, {THREADS_VARIABLE: value}):
                with self.assertRaises(ValueError):
                    thread_count()

    def test_in_process_without_context(self):
        with mock.patch.dict(os.environ, {THREADS_VARIABLE: '4'}):
            self.assertEqual(parallel_map(lambda k: k * k, range(20)), [k * k for k in range(20)])
            self.assertEqual(parallel_map(lambda k: k, []), [])

    def test_distributed_order(self):
        sc = _LocalContext()
        set_spark_context(sc)
        with mock.patch.dict(os.environ, {THREADS_VARIABLE: '4'}):
            # collect() hands results back out of order
            self.assertEqual(parallel_map(lambda k: k * k, range(20)), [k * k for k in range(20)])
            self.assertEqual(parallel_map(lambda k: -k, range(3)), [0, -1, -2])
        self.assertEqual(sc.calls, [4, 3])

    def test_single_thread_stays_in_process(self):
        sc = _LocalContext()
        set_spark_context(sc)
        with mock.patch.dict(os.environ, {THREADS_VARIABLE: '1'}):
            self.assertEqual(parallel_map(lambda k: k + 1, range(5)), [1, 2, 3, 4, 5])
        self.assertEqual(sc.calls, [])

    def test_local_session(self):
        with mock.patch.object(parallel, 'SparkSession') as session:
            sc = local_spark_context(3)
        session.builder.master.assert_called_once_with('local[3]')
        session.builder.appName.assert_called_once_with('koszullift')
        self.assertIs(sc, session.builder.getOrCreate.return_value.sparkContext)


class TestEngineContext(unittest.TestCase):
    def tearDown(self):
        set_default_threads(1)
        set_spark_context(None)

    def test_threads_start_local_session(self):
        with mock.patch.dict(os.environ, {THREADS_VARIABLE: '3'}):
            with mock.patch('koszullift.KoszulLift.local_spark_context') as start:
                engine = KoszulLift()
        start.assert_called_once_with(3)
        self.assertEqual(engine.threads, 3)
        self.assertIs(spark_context(), start.return_value)

    def test_one_thread_needs_no_session(self):
        with mock.patch.dict(os.environ, {THREADS_VARIABLE: ''}):
            with mock.patch('koszullift.KoszulLift.local_spark_context') as start:
                engine = KoszulLift()
        start.assert_not_called()
        self.assertIsNone(engine.sc)
        self.assertIsNone(spark_context())


if __name__ == '__main__':
    unittest.main()
