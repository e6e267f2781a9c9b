# -*- coding:utf-8 -*-
"""
Proximal gradient descent, the fast gradient method and the accelerated proximal scheme.
"""
import time

import numpy as np

from proxnorm.core import CompositeProblem, SmoothOracle, InvalidArgumentError, check_finite, pg_map
from proxnorm.utils import const, logging
from .callbacks import EarlyStoppingError
from .trace import Trace

logger = logging.get_logger(__name__)


def _check_iterations(K):
    if not (isinstance(K, (int, np.integer)) and K >= 1):
        raise InvalidArgumentError(f'`K` must be a positive integer, got {K!r}.')
    return int(K)


def _check_schedule(sched, lip, K):
    if sched.lip != lip:
        raise InvalidArgumentError(f'schedule {sched.name} was built for L={sched.lip}, problem has L={lip}.')
    sched.validate(K)


class _Loop(object):
    def __init__(self, name, trace, callbacks):
        self.name = name
        self.trace = trace
        self.callbacks = callbacks if callbacks is not None else []
        self.tic = None

    def __enter__(self):
        self.tic = time.perf_counter()
        for cb in self.callbacks:
            cb.on_run_start(self.name, self.trace)
        return self

    def elapsed(self):
        return time.perf_counter() - self.tic

    def iteration_end(self, k):
        for cb in self.callbacks:
            cb.on_iteration_end(self.name, self.trace, k)

    def __exit__(self, exc_type, exc_val, exc_tb):
        if exc_type is EarlyStoppingError:
            logger.info(f'{self.name} stopped at k={self.trace.K}: {exc_val}')
        if exc_type is None or exc_type is EarlyStoppingError:
            for cb in self.callbacks:
                cb.on_run_end(self.name, self.trace)
            return True
        return False


def pgd_run(p, x0, eta, K, callbacks=None):
    """
    x^{k+1} = x^k - (eta/L) G(x^k, eta/L) for k = 0..K-1; records x^k, G(x^k, eta/L), phi(x^k).
    """
    assert isinstance(p, CompositeProblem)

    if not (0 < eta <= 1):
        raise InvalidArgumentError(f'`eta` must lie in (0, 1], got {eta}.')
    K = _check_iterations(K)
    x = check_finite('x0', x0).reshape(p.dim).copy()

    t = p.step_size(eta)
    trace = Trace(const.SOLVER_PGD, p.lip, t, eta=eta, problem=p.name)

    with _Loop(const.SOLVER_PGD, trace, callbacks) as loop:
        for k in range(K + 1):
            rec = pg_map(p, x, t)
            trace.append(k, x, rec.g_map, p.phi(x), elapsed=loop.elapsed())
            loop.iteration_end(k)
            x = rec.x_plus

    return trace


def fgm_run(f, x0, sched, K, callbacks=None):
    """
    v^k = v^{k-1} - (b_{k-1}/L) grad f(x^{k-1}),
    x^k = (B_{k-1}/B_k) (x^{k-1} - grad f(x^{k-1}) / L) + (b_k/B_k) v^k, v^0 = x^0.
    """
    assert isinstance(f, SmoothOracle)

    K = _check_iterations(K)
    _check_schedule(sched, f.lip, K)
    x = check_finite('x0', x0).reshape(f.dim).copy()
    v = x.copy()

    t = 1.0 / f.lip
    trace = Trace(const.SOLVER_FGM, f.lip, t, schedule=sched.name)

    with _Loop(const.SOLVER_FGM, trace, callbacks) as loop:
        for k in range(K + 1):
            grad = f.grad(x)
            y = x - t * grad
            trace.append(k, x, grad, f.eval(x), y=y, v=v, phi_y=f.eval(y), elapsed=loop.elapsed())
            loop.iteration_end(k)

            if k < K:
                _, b, B = sched.coefficients(k)
                _, b_next, B_next = sched.coefficients(k + 1)
                v = v - (b / f.lip) * grad
                x = (B / B_next) * y + (b_next / B_next) * v

    return trace


def apg_run(p, x0, sched, K, callbacks=None):
    """
    The fast gradient method with grad f replaced by G(., 1/L):

        y^{k-1} = x^{k-1} - G(x^{k-1}) / L
        v^k = v^{k-1} - (b_{k-1}/L) G(x^{k-1})
        x^k = (B_{k-1}/B_k) y^{k-1} + (b_k/B_k) v^k
    """
    assert isinstance(p, CompositeProblem)

    K = _check_iterations(K)
    _check_schedule(sched, p.lip, K)
    x = check_finite('x0', x0).reshape(p.dim).copy()
    v = x.copy()

    t = 1.0 / p.lip
    trace = Trace(const.SOLVER_APG, p.lip, t, schedule=sched.name, problem=p.name)

    with _Loop(const.SOLVER_APG, trace, callbacks) as loop:
        for k in range(K + 1):
            rec = pg_map(p, x, t)
            y = rec.x_plus
            trace.append(k, x, rec.g_map, p.phi(x), y=y, v=v, phi_y=p.phi(y), elapsed=loop.elapsed())
            loop.iteration_end(k)

            if k < K:
                _, b, B = sched.coefficients(k)
                _, b_next, B_next = sched.coefficients(k + 1)
                v = v - (b / p.lip) * rec.g_map
                x = (B / B_next) * y + (b_next / B_next) * v

    return trace
