# -*- coding:utf-8 -*-
"""

"""
import inspect
import math
from collections import OrderedDict

import numpy as np


def get_params(obj, include_default=False):
    def _get_init_params(cls):
        init = cls.__init__
        if init is object.__init__:
            return []

        init_signature = inspect.signature(init)
        parameters = [p for p in init_signature.parameters.values()
                      if p.name != 'self' and p.kind not in (p.VAR_KEYWORD, p.VAR_POSITIONAL)]
        return parameters

    out = OrderedDict()
    for p in _get_init_params(type(obj)):
        name = p.name
        value = getattr(obj, name, None)
        if include_default or value is not p.default:
            out[name] = value

    return out


def _short(v):
    if isinstance(v, np.ndarray):
        return f'ndarray[shape={v.shape}]'
    return repr(v)


def to_repr(obj, excludes=None):
    if excludes is None:
        excludes = []
    out = ['%s=%s' % (k, _short(v)) for k, v in get_params(obj).items() if k not in excludes]
    repr_ = ', '.join(out)
    return f'{type(obj).__name__}({repr_})'


def float_to_hex(v):
    """Bit-exact text form of a float, `inf`/`-inf`/`nan` spelled out."""
    v = float(v)
    if math.isnan(v):
        return 'nan'
    if math.isinf(v):
        return 'inf' if v > 0 else '-inf'
    return v.hex()


def hex_to_float(s):
    if isinstance(s, (int, float)):
        return float(s)
    if s in ('nan', 'inf', '-inf'):
        return float(s)
    return float.fromhex(s)


def array_to_hex(a):
    """Nested lists of hex strings, shape preserved."""
    a = np.asarray(a, dtype='float64')
    if a.ndim == 0:
        return float_to_hex(a)
    return [array_to_hex(e) for e in a]


def hex_to_array(data):
    def _decode(d):
        if isinstance(d, (list, tuple)):
            return [_decode(e) for e in d]
        return hex_to_float(d)

    return np.asarray(_decode(data), dtype='float64')
