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
from typing import Callable, Iterable, List, Optional, TypeVar

from pyspark import SparkContext
from pyspark.sql import SparkSession

THREADS_VARIABLE = 'KOSZUL_LIFT_THREADS'
APP_NAME = 'koszullift'

T = TypeVar('T')
S = TypeVar('S')

_default_threads = 1
_spark_context = None


def set_default_threads(threads: int):
    """
    Thread count used when KOSZUL_LIFT_THREADS is not set, normally taken from the engine configuration
    """
    global _default_threads
    if threads < 1:
        raise ValueError('Thread count must be positive, got %d' % threads)
    _default_threads = threads


def thread_count() -> int:
    value = os.environ.get(THREADS_VARIABLE)
    if value is None or value.strip() == '':
        return _default_threads
    try:
        threads = int(value)
    except ValueError:
        raise ValueError('%s must be a positive integer, got %r' % (THREADS_VARIABLE, value))
    if threads < 1:
        raise ValueError('%s must be a positive integer, got %r' % (THREADS_VARIABLE, value))
    return threads


def local_spark_context(threads: int, name: str = APP_NAME) -> SparkContext:
    """
    Start, or reuse, a local Spark session with one worker thread per core requested
    :param threads: N for master local[N]
    :param name: application name
    :return: the session's SparkContext
    """
    ss = SparkSession.builder
    ss.appName(name)
    ss.master('local[%d]' % threads)
    return ss.getOrCreate().sparkContext


def set_spark_context(sc: Optional[SparkContext]):
    """
    Context that parallel_map distributes over; None keeps every map in process
    """
    global _spark_context
    _spark_context = sc


def spark_context() -> Optional[SparkContext]:
    return _spark_context


def parallel_map(func: Callable[[T], S], items: Iterable[T]) -> List[S]:
    """
    Map over independent work items, results in input order
    :param func: must pickle, it runs on the Spark workers
    :param items:
    :return: list of results
    """
    items = list(items)
    partitions = min(thread_count(), len(items))
    if partitions <= 1 or _spark_context is None:
        return [func(item) for item in items]

    def local_apply(tup):
        (index, item) = tup
        return index, func(item)

    indexed_items = list(zip(range(len(items)), items))
    indexed_output = dict(_spark_context.parallelize(indexed_items, partitions).map(local_apply).collect())
    return [indexed_output[idx] for idx in range(len(items))]
