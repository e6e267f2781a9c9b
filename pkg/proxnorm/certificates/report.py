# -*- coding:utf-8 -*-
"""
Verdicts of inequality checks.
"""
import math
from collections import OrderedDict

import numpy as np
import pandas as pd

from proxnorm.core import Tolerance
from proxnorm.utils import const, float_to_hex, hex_to_float

MAX_WITNESSES = 10


def _plain(v):
    if isinstance(v, np.ndarray):
        return v.tolist()
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    return v


class CheckReport(object):
    """
    Outcome of one check over its samples.

    `worst_margin` is the smallest raw lhs - rhs seen (+inf when nothing was evaluated);
    `passed` applies the tolerance convention per sample. `details` breaks both down by
    inequality label, `not_evaluated` names inequalities that could not be evaluated.
    """

    def __init__(self, name, samples=0, worst_margin=math.inf, passed=True, witnesses=None,
                 details=None, not_evaluated=None, info=None):
        self.name = name
        self.samples = samples
        self.worst_margin = worst_margin
        self.passed = passed
        self.witnesses = witnesses if witnesses is not None else []
        self.details = details if details is not None else OrderedDict()
        self.not_evaluated = not_evaluated if not_evaluated is not None else []
        self.info = info if info is not None else OrderedDict()

    @staticmethod
    def merge(reports, name=None):
        reports = list(reports)
        assert len(reports) > 0

        merged = CheckReport(name if name is not None else reports[0].name)
        for r in reports:
            merged.samples += r.samples
            merged.worst_margin = min(merged.worst_margin, r.worst_margin)
            merged.passed = merged.passed and r.passed
            merged.witnesses.extend(r.witnesses[:max(MAX_WITNESSES - len(merged.witnesses), 0)])
            for label, d in r.details.items():
                m = merged.details.setdefault(label, {'samples': 0, 'worst_margin': math.inf, 'passed': True})
                m['samples'] += d['samples']
                m['worst_margin'] = min(m['worst_margin'], d['worst_margin'])
                m['passed'] = m['passed'] and d['passed']
            for label in r.not_evaluated:
                if label not in merged.not_evaluated:
                    merged.not_evaluated.append(label)
            for k, v in r.info.items():
                prev = merged.info.get(k)
                if not isinstance(v, (int, float)) or not isinstance(prev, (int, float)):
                    merged.info[k] = v
                elif k.startswith('max_'):
                    merged.info[k] = max(prev, v)
                else:
                    merged.info[k] = prev + v
        return merged

    def to_dict(self):
        return {'name': self.name,
                'samples': self.samples,
                'worst_margin': float_to_hex(self.worst_margin),
                'passed': self.passed,
                'witnesses': self.witnesses,
                'details': {k: {'samples': d['samples'],
                                'worst_margin': float_to_hex(d['worst_margin']),
                                'passed': d['passed']}
                            for k, d in self.details.items()},
                'not_evaluated': list(self.not_evaluated),
                'info': dict(self.info),
                }

    @staticmethod
    def from_dict(d):
        details = OrderedDict((k, {'samples': v['samples'],
                                   'worst_margin': hex_to_float(v['worst_margin']),
                                   'passed': v['passed']})
                              for k, v in d.get('details', {}).items())
        return CheckReport(d['name'], d['samples'], hex_to_float(d['worst_margin']), d['passed'],
                           list(d.get('witnesses', [])), details, list(d.get('not_evaluated', [])),
                           OrderedDict(d.get('info', {})))

    def to_df(self):
        rows = [{'check': self.name, 'inequality': label, 'samples': d['samples'],
                 'worst_margin': d['worst_margin'], 'passed': d['passed']}
                for label, d in self.details.items()]
        rows += [{'check': self.name, 'inequality': label, 'samples': 0,
                  'worst_margin': np.nan, 'passed': None}
                 for label in self.not_evaluated]
        return pd.DataFrame(rows, columns=['check', 'inequality', 'samples', 'worst_margin', 'passed'])

    def __repr__(self):
        return f'CheckReport(name={self.name!r}, samples={self.samples}, ' \
               f'worst_margin={self.worst_margin!r}, passed={self.passed}, witnesses={len(self.witnesses)})'


def reports_to_dict(reports):
    return {'schema': const.REPORT_SCHEMA,
            'passed': all(r.passed for r in reports),
            'reports': [r.to_dict() for r in reports]}


def reports_to_df(reports):
    return pd.concat([r.to_df() for r in reports], ignore_index=True) if reports else pd.DataFrame()


class InequalityCheck(object):
    """Records lhs >= rhs samples into a CheckReport."""

    def __init__(self, name, tol=None, max_witnesses=MAX_WITNESSES):
        self.tol = tol if tol is not None else Tolerance()
        self.max_witnesses = max_witnesses
        self._report = CheckReport(name)

    def ge(self, label, lhs, rhs, **witness):
        lhs, rhs = float(lhs), float(rhs)
        holds = self.tol.holds_ge(lhs, rhs)
        margin = math.inf if holds and (math.isinf(lhs) or math.isinf(rhs)) else lhs - rhs

        r = self._report
        r.samples += 1
        r.worst_margin = min(r.worst_margin, margin)
        d = r.details.setdefault(label, {'samples': 0, 'worst_margin': math.inf, 'passed': True})
        d['samples'] += 1
        d['worst_margin'] = min(d['worst_margin'], margin)
        if not holds:
            r.passed = False
            d['passed'] = False
            if len(r.witnesses) < self.max_witnesses:
                w = OrderedDict(inequality=label, lhs=lhs, rhs=rhs, margin=margin)
                w.update((k, _plain(v)) for k, v in witness.items())
                r.witnesses.append(w)
        return holds

    def le(self, label, lhs, rhs, **witness):
        return self.ge(label, rhs, lhs, **witness)

    def skip(self, label):
        if label not in self._report.not_evaluated:
            self._report.not_evaluated.append(label)

    def note(self, key, value):
        self._report.info[key] = value

    def report(self):
        return self._report
