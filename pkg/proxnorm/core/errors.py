# -*- coding:utf-8 -*-
"""

"""
import numpy as np


class ProxnormError(Exception):
    pass


class InvalidArgumentError(ProxnormError, ValueError):
    pass


class OutOfHypothesisError(InvalidArgumentError):
    """An inequality was asked about outside the parameter range it is proven for."""
    pass


class FixtureMismatchError(InvalidArgumentError):
    pass


class RequiresReferenceError(ProxnormError, RuntimeError):
    pass


class NoReferenceError(ProxnormError, RuntimeError):
    pass


class BracketError(ProxnormError, RuntimeError):
    pass


def check_finite(name, v):
    v = np.asarray(v, dtype='float64')
    if not np.all(np.isfinite(v)):
        raise InvalidArgumentError(f'`{name}` must be finite, got {v}.')
    return v


def check_positive(name, v):
    if not (np.isfinite(v) and v > 0):
        raise InvalidArgumentError(f'`{name}` must be positive, got {v}.')
    return float(v)
