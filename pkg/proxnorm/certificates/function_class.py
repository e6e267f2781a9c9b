# -*- coding:utf-8 -*-
"""
Sampled checks that f belongs to S(mu, L) with its declared constants.
"""
import numpy as np

from proxnorm.core import InvalidArgumentError
from .report import InequalityCheck

CHECK_FUNCTION_CLASS = 'function-class'


def check_function_class(f, pairs, tol=None):
    """
    At each pair (x, y), with d = x - y and D = grad f(x) - grad f(y):

        lower/upper quadratic bounds   f(x) - f(y) - <grad f(y), d> in [mu/2 |d|^2, L/2 |d|^2]
        unif2   <D, d> >= mu L / (mu + L) |d|^2 + |D|^2 / (mu + L)
        unif3   f(x) >= f(y) + <grad f(y), d> + |D|^2 / (2L) + mu L / (2(L - mu)) |d - D/L|^2
        unif4   mu |d| <= |D| <= L |d|

    and, when mu = 0, f(x) >= f(y) + <grad f(y), d> + |D|^2 / (2L) and <D, d> >= |D|^2 / L.
    The last term of unif3 vanishes when mu = L.
    """
    pairs = list(pairs)
    if len(pairs) == 0:
        raise InvalidArgumentError('`pairs` must not be empty.')

    mu, lip = f.mu, f.lip
    check = InequalityCheck(CHECK_FUNCTION_CLASS, tol=tol)

    for x, y in pairs:
        x = np.asarray(x, dtype='float64')
        y = np.asarray(y, dtype='float64')
        fx, fy = f.eval(x), f.eval(y)
        gx, gy = f.grad(x), f.grad(y)
        d = x - y
        D = gx - gy
        d2 = float(d @ d)
        D2 = float(D @ D)
        inner = float(D @ d)
        linear = fy + float(gy @ d)
        w = dict(x=x, y=y)

        check.ge('strong-convexity', fx, linear + 0.5 * mu * d2, **w)
        check.le('smoothness', fx, linear + 0.5 * lip * d2, **w)
        check.ge('unif2', inner, mu * lip / (mu + lip) * d2 + D2 / (mu + lip), **w)

        tail = 0.0
        if mu < lip:
            r = d - D / lip
            tail = mu * lip / (2.0 * (lip - mu)) * float(r @ r)
        check.ge('unif3', fx, linear + D2 / (2.0 * lip) + tail, **w)

        check.le('unif4-upper', np.sqrt(D2), lip * np.sqrt(d2), **w)
        if d2 > 0:
            check.ge('unif4-lower', np.sqrt(D2), mu * np.sqrt(d2), **w)

        if mu == 0:
            check.ge('unif1', fx, linear + D2 / (2.0 * lip), **w)
            check.ge('cocoercivity', inner, D2 / lip, **w)

    return check.report()
