# -*- coding:utf-8 -*-
"""
Brute-force 1-D prox: coarse grid, then ternary refinement.
"""
import math

import numpy as np

from proxnorm.core import InvalidArgumentError, BracketError, check_positive
from .cfg import OracleCfg


def _values(h, ys):
    try:
        vals = np.asarray(h(ys), dtype='float64')
        if vals.shape == ys.shape:
            return vals
    except (TypeError, ValueError):
        pass
    return np.array([float(h(y)) for y in ys])


def grid_prox_1d(g, v, t, lo, hi, step=None, width=None):
    """
    argmin over y in [lo, hi] of g(y) + (y - v)^2 / (2t).

    `g` is a scalar convex callable, vectorized callables are evaluated on the whole grid at once.
    """
    t = check_positive('t', t)
    if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
        raise InvalidArgumentError(f'a finite bracket lo < hi is required, got [{lo}, {hi}].')
    if step is None:
        step = OracleCfg.grid_step
    if width is None:
        width = OracleCfg.ternary_width

    def h(y):
        return g(y) + (y - v) ** 2 / (2.0 * t)

    n = max(int(math.ceil((hi - lo) / step)), 2)
    ys = np.linspace(lo, hi, n + 1)
    vals = _values(h, ys)
    i = int(np.argmin(vals))
    if not np.isfinite(vals[i]):
        raise BracketError(f'g is +inf on the whole bracket [{lo}, {hi}].')
    if i == 0 or i == n:
        raise BracketError(f'argmin {ys[i]} lies on the bracket edge of [{lo}, {hi}].')

    a, b = ys[i - 1], ys[i + 1]
    best_y, best_h = ys[i], vals[i]
    while b - a > width:
        m1 = a + (b - a) / 3.0
        m2 = b - (b - a) / 3.0
        h1, h2 = float(h(m1)), float(h(m2))
        if math.isinf(h1) and math.isinf(h2):
            # dom g is an interval holding best_y but neither trisection point
            if best_y <= m1:
                b = m1
            elif best_y >= m2:
                a = m2
            else:
                a, b = m1, m2
            continue
        if h1 < h2:
            b = m2
        else:
            a = m1
        for y_, h_ in ((m1, h1), (m2, h2)):
            if h_ < best_h:
                best_y, best_h = y_, h_

    candidates = [best_y, a, b, 0.5 * (a + b)]
    return min(candidates, key=lambda y: (float(h(y)), abs(y - 0.5 * (a + b))))


def grid_prox(g, v, t, lo, hi, step=None, width=None):
    """grid_prox_1d applied coordinatewise to a separable g."""
    if not g.separable:
        raise InvalidArgumentError(f'{type(g).__name__} is not separable.')

    v = np.asarray(v, dtype='float64')
    lo = np.broadcast_to(np.asarray(lo, dtype='float64'), v.shape)
    hi = np.broadcast_to(np.asarray(hi, dtype='float64'), v.shape)
    return np.array([grid_prox_1d(g.coordinate(i), v[i], t, lo[i], hi[i], step=step, width=width)
                     for i in range(v.shape[0])])
