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

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, TextIO, Tuple

from koszullift.KoszulLift import KoszulLift
from koszullift.kernel.datatypes.report import CheckReport
from koszullift.kernel.datatypes.gradedring import GradedRing
from koszullift.kernel.datatypes.subtypes import JobSpec, Presentation
from koszullift.kernel.exceptions import InputFormatError, KoszulLiftError
from koszullift.kernel.schemas.reportschema import ReportSchema
from koszullift.processor.algebra.complexes import check_complex
from koszullift.processor.construction.golden import EXAMPLE_NAMES
from koszullift.processor.preprocessor import parser as inputs
from koszullift.processor.preprocessor.serializer import (complex_to_json, family_to_json, render_complex,
                                                          render_product_complex)

logger = logging.getLogger(__name__)

COMMANDS = ('lift', 'assemble', 'verify', 'resolve', 'example', 'regularity', 'suite')

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def build_parser() -> argparse.ArgumentParser:
    argparser = argparse.ArgumentParser(prog='koszullift',
                                        description='Higher homotopies and product complexes over a complete '
                                                    'intersection, with exact verification')
    argparser.add_argument('command', choices=COMMANDS)
    argparser.add_argument('name', nargs='?', help='example name, one of: %s' % ', '.join(EXAMPLE_NAMES))
    argparser.add_argument('--ring')
    argparser.add_argument('--complex')
    argparser.add_argument('--presentation')
    argparser.add_argument('--level', type=int)
    argparser.add_argument('--degree-bound', type=int)
    argparser.add_argument('--homological-bound', type=int)
    argparser.add_argument('--dim-q', type=int)
    argparser.add_argument('--format', choices=('text', 'json'), default='text')
    argparser.add_argument('--seed', type=int, default=0)
    argparser.add_argument('--count', type=int)
    argparser.add_argument('--verify', action='store_true')
    argparser.add_argument('--config')
    return argparser


def _check_bounds(args: argparse.Namespace, ring: Optional[GradedRing], presentation: Optional[Presentation]):
    """
    Flag values the engine would reject, reported as input errors before any computation starts
    """
    problems = {}
    c = ring.codimension if ring is not None else None
    if args.level is not None and c is not None and not 0 <= args.level <= c:
        problems['level'] = ['Must lie in 0..%d.' % c]
    if args.dim_q is not None and c is not None and args.dim_q < c:
        problems['dim_q'] = ['Must be at least the codimension %d.' % c]
    if args.command == 'resolve':
        if args.homological_bound is not None and args.homological_bound < 1:
            problems['homological_bound'] = ['Must be at least 1.']
        if args.degree_bound is not None and presentation is not None and presentation.twists \
                and args.degree_bound <= max(presentation.twists):
            problems['degree_bound'] = ['Must exceed the largest generator degree %d.' % max(presentation.twists)]
    if args.command == 'regularity' and args.degree_bound is not None and ring.sequence \
            and args.degree_bound < max(ring.sequence_degrees):
        problems['degree_bound'] = ['Must be at least the largest degree of f, %d.' % max(ring.sequence_degrees)]
    if problems:
        raise InputFormatError('Flags out of range: %s' % ', '.join(sorted(problems)), problems)


def _job(args: argparse.Namespace) -> JobSpec:
    ring = complex = presentation = None
    if args.command in JobSpec.INPUT_COMMANDS + ('regularity',):
        if not args.ring:
            raise InputFormatError('Command %s needs --ring' % args.command, {'ring': ['Missing flag.']})
        ring = inputs.build_ring(inputs.load_document(args.ring))
    if args.complex:
        complex = inputs.build_complex(inputs.load_document(args.complex), ring)
    if args.presentation:
        presentation = inputs.build_presentation(inputs.load_document(args.presentation), ring)
    if args.command == 'resolve' and presentation is None:
        raise InputFormatError('Command resolve needs --presentation', {'presentation': ['Missing flag.']})
    if args.command in ('lift', 'assemble', 'verify') and complex is None:
        raise InputFormatError('Command %s needs --complex' % args.command, {'complex': ['Missing flag.']})
    if args.command == 'example' and args.name not in EXAMPLE_NAMES:
        raise InputFormatError('Unknown example %r' % args.name, {'name': ['One of: %s.' % ', '.join(EXAMPLE_NAMES)]})
    _check_bounds(args, ring, presentation)
    try:
        return JobSpec(args.command, ring=ring, complex=complex, presentation=presentation, level=args.level,
                       degree_bound=args.degree_bound, homological_bound=args.homological_bound,
                       dim_q=args.dim_q, output_format=args.format, seed=args.seed, count=args.count,
                       example=args.name, verify=args.verify)
    except ValueError as e:
        raise InputFormatError(str(e))


def _engine(configuration_file: Optional[str]) -> KoszulLift:
    try:
        return KoszulLift(configuration_file)
    except ValueError as e:
        raise InputFormatError('Invalid configuration: %s' % e)


def execute(engine: KoszulLift, job: JobSpec) -> Tuple[CheckReport, Dict[str, Any], List[str]]:
    """
    Run one job
    :return: (report, JSON result payload, text result sections)
    """
    command = job.command
    if command == 'lift':
        checked = check_complex(job.complex)
        if not checked.passed:
            return CheckReport.aggregate('lift', [checked]), {}, []
        F, H = engine.lift(job.complex, job.level)
        return (CheckReport.aggregate('lift', [checked], data={'level': H.level}),
                {'lift': complex_to_json(F), 'family': family_to_json(H)}, [render_complex(F)])
    if command == 'assemble':
        checked = check_complex(job.complex)
        if not checked.passed:
            return CheckReport.aggregate('assemble', [checked]), {}, []
        F, H, P = engine.assemble(job.complex)
        return (CheckReport.aggregate('assemble', [checked], data={'window': list(P.window),
                                                                   'input_window': list(job.complex.window)}),
                {'product': complex_to_json(P.complex), 'family': family_to_json(H)}, [render_product_complex(P)])
    if command == 'verify':
        return engine.verify(job.complex, job.degree_bound, job.dim_q), {}, []
    if command == 'resolve':
        C, report = engine.resolve(job.presentation, job.homological_bound or 3, job.degree_bound)
        return report, {'complex': complex_to_json(C)}, [render_complex(C)]
    if command == 'example':
        P, report = engine.example(job.example, job.verify)
        return report, {'product': complex_to_json(P.complex), 'family': family_to_json(P.family)}, \
            [render_product_complex(P)]
    if command == 'regularity':
        return engine.regularity(job.ring, job.degree_bound), {}, []
    return engine.suite(job.seed, 10 if job.count is None else job.count, job.degree_bound or 6), {}, []


def _string_keys(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _string_keys(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_string_keys(v) for v in value]
    return value


def _report_lines(report: CheckReport, depth: int = 0) -> List[str]:
    lines = ['  ' * depth + str(report)]
    for child in report.children:
        lines.extend(_report_lines(child, depth + 1))
    return lines


def _emit(stdout: TextIO, engine: Optional[KoszulLift], output_format: str, document: Dict[str, Any],
          report: CheckReport = None, sections: List[str] = ()):
    if output_format == 'json':
        indent = engine.report_indent if engine is not None else 2
        stdout.write(json.dumps(document, sort_keys=True, indent=indent) + '\n')
        return
    lines = ['%s: %s' % (document['command'], document['status'])]
    if report is not None:
        lines.extend(_report_lines(report))
        failure = report.first_failure()
        if failure is not None:
            lines.append('first failure: ' + str(failure))
    if 'error' in document:
        lines.append('%s: %s' % (document['error']['code'], document['error']['message']))
        for field, problems in sorted(document['error'].get('diagnostics', {}).items()):
            lines.append('  %s: %s' % (field, problems))
    lines.extend(sections)
    stdout.write('\n'.join(lines) + '\n')


def run(argv: List[str] = None, stdout: TextIO = None, default_config: str = None) -> int:
    """
    Command line entry point
    :param argv: arguments without the program name
    :param stdout: report stream, sys.stdout when omitted
    :param default_config: configuration used when --config is not given
    :return: exit code, 0 all checks pass, 1 a check fails, 2 input error
    """
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_PASS

    engine = None
    schema = 'koszul-lift/1'
    try:
        engine = _engine(args.config or default_config)
        schema = engine.report_schema
        job = _job(args)
        report, result, sections = execute(engine, job)
    except InputFormatError as e:
        error = {'code': e.code, 'message': str(e)}
        if e.diagnostics:
            error['diagnostics'] = _string_keys(e.diagnostics)
        _emit(stdout, engine, args.format, {'schema': schema, 'command': args.command, 'status': 'ERROR',
                                            'error': error})
        return EXIT_INPUT
    except KoszulLiftError as e:
        logger.warning('%s: %s', e.code, e)
        _emit(stdout, engine, args.format, {'schema': schema, 'command': args.command, 'status': 'FAIL',
                                            'error': {'code': e.code, 'message': str(e)}})
        return EXIT_FAIL

    document = {'schema': schema, 'command': job.command, 'status': report.outcome.value,
                'checks': [ReportSchema().dump(report)], 'result': result}
    failure = report.first_failure()
    if failure is not None:
        document['first_failure'] = ReportSchema().dump(failure)
    _emit(stdout, engine, job.output_format, document, report, sections)
    return EXIT_PASS if report.passed else EXIT_FAIL
