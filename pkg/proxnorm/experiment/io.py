# -*- coding:utf-8 -*-
"""
Fixture, trace and report files.

JSON files carry hex floats and sorted keys, so equal inputs give byte-identical files.
CSV files open with a `# proxnorm <schema>/<version>` line followed by the header row.
"""
import io
import json

import pandas as pd

from proxnorm.core import FixtureMismatchError
from proxnorm.functions import problem_to_dict, problem_from_dict
from proxnorm.oracles import ReferenceSolution
from proxnorm.solvers import Trace
from proxnorm.utils import const, logging

logger = logging.get_logger(__name__)

PROBLEM_SUFFIX = '.problem.json'
REFERENCE_SUFFIX = '.reference.json'
TRACE_JSON_SUFFIX = '.trace.json'
TRACE_CSV_SUFFIX = '.trace.csv'
REPORT_SUFFIX = '.report.json'
COMPARE_SUFFIX = '.compare.csv'


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + '\n'


def reference_path_of(problem_path):
    if not problem_path.endswith(PROBLEM_SUFFIX):
        raise FixtureMismatchError(f'a fixture path must end with {PROBLEM_SUFFIX}, got {problem_path}.')
    return problem_path[:-len(PROBLEM_SUFFIX)] + REFERENCE_SUFFIX


def write_fixture(storage, name, p, sol, generator):
    problem_path = f'{name}{PROBLEM_SUFFIX}'
    reference_path = f'{name}{REFERENCE_SUFFIX}'

    storage.write_text(problem_path, dumps({'schema': const.FIXTURE_SCHEMA,
                                            'generator': generator,
                                            'problem': problem_to_dict(p)}))
    reference = sol.to_dict()
    reference['problem'] = p.name
    reference['seed'] = generator.get('seed')
    storage.write_text(reference_path, dumps(reference))

    return storage.to_path(problem_path), storage.to_path(reference_path)


def read_fixture(storage, problem_path):
    """The problem with its reference optimum attached, and the generator parameters."""
    d = json.loads(storage.read_text(problem_path))
    if d.get('schema') != const.FIXTURE_SCHEMA:
        raise FixtureMismatchError(f'Unsupported fixture schema: {d.get("schema")!r} in {problem_path}')
    p = problem_from_dict(d['problem'])

    ref = json.loads(storage.read_text(reference_path_of(problem_path)))
    if ref.get('problem') != p.name:
        raise FixtureMismatchError(f'reference of {ref.get("problem")!r} does not belong to {p.name!r}.')
    sol = ReferenceSolution.from_dict(ref)

    return p.with_reference(sol.x_star, sol.phi_bar), d.get('generator', {})


def write_csv(storage, path, df, schema):
    buf = io.StringIO()
    buf.write(f'# proxnorm {schema}\n')
    df.to_csv(buf, index=False, float_format='%.17g', na_rep='', lineterminator='\n')
    storage.write_text(path, buf.getvalue())
    return storage.to_path(path)


def read_csv(storage, path):
    with storage.open(path, 'r') as f:
        first = f.readline()
        if not first.startswith('# proxnorm '):
            raise FixtureMismatchError(f'{path} is not a proxnorm csv file.')
        df = pd.read_csv(f)
    return first[len('# proxnorm '):].strip(), df


def write_trace(storage, name, trace):
    json_path = f'{name}{TRACE_JSON_SUFFIX}'
    storage.write_text(json_path, dumps(trace.to_dict()))
    csv_path = write_csv(storage, f'{name}{TRACE_CSV_SUFFIX}', trace.to_df(), const.TRACE_CSV_SCHEMA)
    return storage.to_path(json_path), csv_path


def read_trace(storage, path):
    return Trace.from_dict(json.loads(storage.read_text(path)))


def write_reports(storage, name, reports_dict):
    path = f'{name}{REPORT_SUFFIX}'
    storage.write_text(path, dumps(reports_dict))
    return storage.to_path(path)
