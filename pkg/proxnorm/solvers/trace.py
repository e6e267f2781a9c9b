# -*- coding:utf-8 -*-
"""
Per-iteration solver history.
"""
import numpy as np
import pandas as pd

from proxnorm.core import InvalidArgumentError
from proxnorm.utils import const, array_to_hex, hex_to_array, float_to_hex, hex_to_float

_VECTOR_FIELDS = ('x', 'y', 'v', 'g_map')
_SCALAR_FIELDS = ('g_norm', 'phi_x', 'phi_y')


class Trace(object):
    """
    Iterates k = 0..K of one run.

    `g_map` holds G(x^k, t) for the proximal solvers and grad f(x^k) for the fast
    gradient method; `y`, `v` and `phi_y` are empty for proximal gradient descent.
    """

    def __init__(self, solver, lip, step, eta=None, schedule=None, problem=None):
        self.solver = solver
        self.lip = float(lip)
        self.step = float(step)
        self.eta = None if eta is None else float(eta)
        self.schedule = schedule
        self.problem = problem

        self.k = []
        self.x = []
        self.y = []
        self.v = []
        self.g_map = []
        self.g_norm = []
        self.phi_x = []
        self.phi_y = []
        self.elapsed = []
        self.potential = None

    def append(self, k, x, g_map, phi_x, y=None, v=None, phi_y=None, elapsed=0.0):
        if k != len(self.k):
            raise InvalidArgumentError(f'trace indices must be contiguous, expected {len(self.k)}, got {k}.')

        self.k.append(int(k))
        self.x.append(np.array(x, dtype='float64'))
        self.g_map.append(np.array(g_map, dtype='float64'))
        self.g_norm.append(float(np.linalg.norm(g_map)))
        self.phi_x.append(float(phi_x))
        if y is not None:
            self.y.append(np.array(y, dtype='float64'))
            self.v.append(np.array(v, dtype='float64'))
            self.phi_y.append(float(phi_y))
        self.elapsed.append(float(elapsed))

    @property
    def K(self):
        return len(self.k) - 1

    @property
    def has_momentum(self):
        return len(self.y) > 0

    def __len__(self):
        return len(self.k)

    def to_df(self):
        df = pd.DataFrame({'k': self.k, 'g_norm': self.g_norm, 'phi_x': self.phi_x})
        if self.has_momentum:
            df['phi_y'] = self.phi_y
        if self.potential is not None:
            df['potential'] = self.potential
        df['elapsed'] = self.elapsed
        return df

    def to_dict(self):
        d = {'schema': const.TRACE_SCHEMA,
             'solver': self.solver,
             'lip': float_to_hex(self.lip),
             'step': float_to_hex(self.step),
             'eta': None if self.eta is None else float_to_hex(self.eta),
             'schedule': self.schedule,
             'problem': self.problem,
             'k': list(self.k),
             'elapsed': list(self.elapsed),
             }
        for name in _VECTOR_FIELDS:
            d[name] = [array_to_hex(e) for e in getattr(self, name)]
        for name in _SCALAR_FIELDS:
            d[name] = [float_to_hex(e) for e in getattr(self, name)]
        if self.potential is not None:
            d['potential'] = [float_to_hex(e) for e in self.potential]
        return d

    @staticmethod
    def from_dict(d):
        if d.get('schema') != const.TRACE_SCHEMA:
            raise InvalidArgumentError(f'Unsupported trace schema: {d.get("schema")!r}')

        eta = d.get('eta')
        trace = Trace(d['solver'], hex_to_float(d['lip']), hex_to_float(d['step']),
                      eta=None if eta is None else hex_to_float(eta),
                      schedule=d.get('schedule'), problem=d.get('problem'))
        trace.k = [int(k) for k in d['k']]
        trace.elapsed = [float(e) for e in d['elapsed']]
        for name in _VECTOR_FIELDS:
            setattr(trace, name, [hex_to_array(e) for e in d[name]])
        for name in _SCALAR_FIELDS:
            setattr(trace, name, [hex_to_float(e) for e in d[name]])
        if 'potential' in d:
            trace.potential = [hex_to_float(e) for e in d['potential']]
        return trace

    def equals(self, other):
        """Bitwise equality of everything but wall-time."""
        if not isinstance(other, Trace):
            return False
        if (self.solver, self.lip, self.step, self.eta, self.schedule, self.k) != \
                (other.solver, other.lip, other.step, other.eta, other.schedule, other.k):
            return False
        for name in _VECTOR_FIELDS:
            a, b = getattr(self, name), getattr(other, name)
            if len(a) != len(b) or not all(np.array_equal(u, w) for u, w in zip(a, b)):
                return False
        for name in _SCALAR_FIELDS:
            if not np.array_equal(np.array(getattr(self, name)), np.array(getattr(other, name))):
                return False
        return True

    def __repr__(self):
        return f'Trace(solver={self.solver!r}, K={self.K}, lip={self.lip!r}, step={self.step!r})'
