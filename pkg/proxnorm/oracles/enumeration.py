# -*- coding:utf-8 -*-
"""
Subdifferential distance by enumeration of per-coordinate subgradient intervals.
"""
import math

import numpy as np

from proxnorm.core import InvalidArgumentError
from proxnorm.functions import L1Norm, BoxIndicator
from .cfg import OracleCfg

MAX_ENUM_DIM = 3


def _intervals(g, x, radius):
    if isinstance(g, L1Norm):
        lam = g.lam
        return [(lam, lam) if xi > 0 else (-lam, -lam) if xi < 0 else (-lam, lam) for xi in x]

    lo = np.broadcast_to(g.lo, x.shape)
    hi = np.broadcast_to(g.hi, x.shape)
    if np.any(x < lo) or np.any(x > hi):
        raise InvalidArgumentError(f'x is outside the box: {x}.')

    out = []
    for xi, li, hi_ in zip(x, lo, hi):
        if li == hi_:
            out.append((-radius, radius))
        elif xi == li:
            out.append((-radius, 0.0))
        elif xi == hi_:
            out.append((0.0, radius))
        else:
            out.append((0.0, 0.0))
    return out


def subdiff_enum_dist(g, x, w, step=None, radius=None):
    """
    min over s in dg(x) of |w + s| for l1 or box g in dimension <= 3.

    Each subgradient interval is enumerated on a grid including its endpoints; unbounded
    normal-cone intervals are cut at `radius`, which must dominate |w|_inf. The product
    minimum is assembled coordinatewise since both kinds are separable.
    """
    if not isinstance(g, (L1Norm, BoxIndicator)):
        raise InvalidArgumentError(f'enumeration supports l1 and box g only, got {type(g).__name__}.')

    x = np.atleast_1d(np.asarray(x, dtype='float64'))
    w = np.atleast_1d(np.asarray(w, dtype='float64'))
    if x.shape != w.shape or x.ndim != 1 or x.shape[0] > MAX_ENUM_DIM:
        raise InvalidArgumentError(f'enumeration needs matching 1-D x and w with dim <= {MAX_ENUM_DIM}, '
                                   f'got {x.shape} and {w.shape}.')
    if step is None:
        step = OracleCfg.enum_step
    if radius is None:
        radius = OracleCfg.enum_radius
    if np.max(np.abs(w)) > radius:
        raise InvalidArgumentError(f'|w|_inf = {np.max(np.abs(w))} exceeds the truncation radius {radius}.')

    residuals = []
    for (a, b), wi in zip(_intervals(g, x, radius), w):
        n = max(int(math.ceil((b - a) / step)), 1)
        s = np.linspace(a, b, n + 1)
        residuals.append(np.min(np.abs(wi + s)))
    return float(np.linalg.norm(residuals))
