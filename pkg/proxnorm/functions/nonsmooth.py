# -*- coding:utf-8 -*-
"""
Structured g with closed-form prox and exact subdifferential distance.
"""
import numpy as np

from proxnorm.core import ProxOracle, InvalidArgumentError
from proxnorm.utils import array_to_hex, float_to_hex, hex_to_array, hex_to_float, const


def subgrad_dist_l1(lam, x, w):
    """Exact distance from 0 to w + d(lam |.|_1)(x)."""
    if lam < 0:
        raise InvalidArgumentError(f'`lam` must be nonnegative, got {lam}.')

    x = np.asarray(x, dtype='float64')
    w = np.asarray(w, dtype='float64')
    c = np.where(x != 0, w + lam * np.sign(x), np.maximum(np.abs(w) - lam, 0.0))
    return float(np.linalg.norm(c))


def subgrad_dist_box(lo, hi, x, w):
    """
    Exact distance from 0 to w + N(x), N the normal cone of the box [lo, hi] at a feasible x.

    Coordinatewise: interior |w_i|; at lo_i the cone is (-inf, 0], leaving max(-w_i, 0);
    at hi_i it is [0, inf), leaving max(w_i, 0); a degenerate lo_i == hi_i leaves 0.
    """
    x = np.asarray(x, dtype='float64')
    w = np.asarray(w, dtype='float64')
    lo = np.broadcast_to(np.asarray(lo, dtype='float64'), x.shape)
    hi = np.broadcast_to(np.asarray(hi, dtype='float64'), x.shape)

    if np.any(x < lo) or np.any(x > hi):
        raise InvalidArgumentError(f'x is outside the box: {x}.')

    at_lo = x == lo
    at_hi = x == hi
    r = np.abs(w)
    r = np.where(at_lo, np.maximum(-w, 0.0), r)
    r = np.where(at_hi, np.maximum(w, 0.0), r)
    r = np.where(at_lo & at_hi, 0.0, r)
    return float(np.linalg.norm(r))


class ZeroFunction(ProxOracle):
    kind = const.NONSMOOTH_ZERO
    separable = True

    @property
    def is_zero(self):
        return True

    def eval(self, x):
        return 0.0

    def prox(self, v, t):
        return np.array(v, dtype='float64', copy=True)

    def subgrad_dist(self, x, w):
        return float(np.linalg.norm(w))

    def coordinate(self, i):
        return lambda y: np.zeros(np.shape(y))

    def to_dict(self):
        return {'kind': self.kind}


class L1Norm(ProxOracle):
    """lam * |x|_1, prox is soft-thresholding at lam * t."""
    kind = const.NONSMOOTH_L1
    separable = True

    def __init__(self, lam, dim=None):
        if not (np.isfinite(lam) and lam >= 0):
            raise InvalidArgumentError(f'`lam` must be nonnegative, got {lam}.')

        super(L1Norm, self).__init__(dim)
        self.lam = float(lam)

    def eval(self, x):
        return self.lam * float(np.sum(np.abs(x)))

    def prox(self, v, t):
        v = np.asarray(v, dtype='float64')
        return np.sign(v) * np.maximum(np.abs(v) - self.lam * t, 0.0)

    def subgrad_dist(self, x, w):
        return subgrad_dist_l1(self.lam, x, w)

    def coordinate(self, i):
        lam = self.lam
        return lambda y: lam * np.abs(y)

    def to_dict(self):
        return {'kind': self.kind, 'lam': float_to_hex(self.lam)}


class BoxIndicator(ProxOracle):
    """Indicator of {lo <= x <= hi}; bounds may be infinite, prox is the projection."""
    kind = const.NONSMOOTH_BOX
    separable = True

    def __init__(self, lo, hi, dim=None):
        lo = np.asarray(lo, dtype='float64')
        hi = np.asarray(hi, dtype='float64')
        if dim is not None:
            lo = np.broadcast_to(lo, (dim,)).copy()
            hi = np.broadcast_to(hi, (dim,)).copy()
        if np.any(np.isnan(lo)) or np.any(np.isnan(hi)) or np.any(lo > hi):
            raise InvalidArgumentError(f'invalid box bounds lo={lo}, hi={hi}.')

        super(BoxIndicator, self).__init__(dim)
        self.lo = lo
        self.hi = hi

    def _bounds(self, x):
        return np.broadcast_to(self.lo, x.shape), np.broadcast_to(self.hi, x.shape)

    def eval(self, x):
        x = np.asarray(x, dtype='float64')
        lo, hi = self._bounds(x)
        return 0.0 if np.all(x >= lo) and np.all(x <= hi) else np.inf

    def prox(self, v, t):
        v = np.asarray(v, dtype='float64')
        lo, hi = self._bounds(v)
        return np.clip(v, lo, hi)

    def subgrad_dist(self, x, w):
        x = np.asarray(x, dtype='float64')
        lo, hi = self._bounds(x)
        return subgrad_dist_box(lo, hi, x, w)

    def coordinate(self, i):
        lo = float(self.lo if self.lo.ndim == 0 else self.lo[i])
        hi = float(self.hi if self.hi.ndim == 0 else self.hi[i])
        return lambda y: np.where((y >= lo) & (y <= hi), 0.0, np.inf)

    def to_dict(self):
        return {'kind': self.kind, 'lo': array_to_hex(self.lo), 'hi': array_to_hex(self.hi)}


class NonnegIndicator(BoxIndicator):
    kind = const.NONSMOOTH_NONNEG

    def __init__(self, dim=None):
        super(NonnegIndicator, self).__init__(0.0, np.inf, dim=dim)

    def to_dict(self):
        return {'kind': self.kind}


def make_nonsmooth(kind, dim=None, lam=None, lo=None, hi=None):
    if kind == const.NONSMOOTH_ZERO:
        return ZeroFunction(dim)
    elif kind == const.NONSMOOTH_L1:
        if lam is None:
            raise InvalidArgumentError('`lam` is required for l1.')
        return L1Norm(lam, dim=dim)
    elif kind == const.NONSMOOTH_BOX:
        if lo is None or hi is None:
            raise InvalidArgumentError('`lo` and `hi` are required for box.')
        return BoxIndicator(lo, hi, dim=dim)
    elif kind == const.NONSMOOTH_NONNEG:
        return NonnegIndicator(dim)
    else:
        raise InvalidArgumentError(f'Unsupported nonsmooth kind: {kind!r}')


def nonsmooth_from_dict(d, dim=None):
    kind = d.get('kind')
    if kind == const.NONSMOOTH_L1:
        return L1Norm(hex_to_float(d['lam']), dim=dim)
    elif kind == const.NONSMOOTH_BOX:
        return BoxIndicator(hex_to_array(d['lo']), hex_to_array(d['hi']), dim=dim)
    return make_nonsmooth(kind, dim=dim)
