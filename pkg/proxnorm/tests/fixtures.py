# -*- coding:utf-8 -*-
"""
Small problems with known solutions.
"""
import numpy as np

from proxnorm.core import CompositeProblem
from proxnorm.functions import QuadraticSmooth, ZeroFunction, L1Norm, NonnegIndicator, make_problem
from proxnorm.oracles import with_reference


def unit_quadratic(g=None):
    """f(x) = x^2 / 2 in 1-D, mu = L = 1, x* = 0."""
    f = QuadraticSmooth([[1.0]], [0.0])
    p = CompositeProblem(f, g if g is not None else ZeroFunction(1), name='unit-quadratic')
    return p.with_reference([0.0], 0.0)


def lasso_1d():
    """(x - 2)^2 / 2 + |x|, x* = 1, phi_bar = 3/2."""
    f = QuadraticSmooth([[1.0]], [2.0], c=2.0)
    p = CompositeProblem(f, L1Norm(1.0, dim=1), name='lasso-1d')
    return p.with_reference([1.0], 1.5)


def nonneg_1d():
    return CompositeProblem(QuadraticSmooth([[1.0]], [0.0]), NonnegIndicator(1), name='nonneg-1d')


def generated(kind, n, seed=0, **kwargs):
    p = make_problem(kind, n, seed=seed, **kwargs)
    p, _ = with_reference(p)
    return p


def origin(p):
    return np.zeros(p.dim)
