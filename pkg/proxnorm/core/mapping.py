# -*- coding:utf-8 -*-
"""
The proximal gradient mapping

    G(x, t) = (x - prox_{tg}(x - t * grad f(x))) / t

and the subgradient s+ in dg(x+) it certifies: x+ = x - t * (grad f(x) + s+).
"""
import numpy as np

from .errors import InvalidArgumentError, check_finite, check_positive
from .oracles import StepRecord


def prox_apply(g, v, t):
    t = check_positive('t', t)
    v = check_finite('v', v)

    z = np.asarray(g.prox(v, t), dtype='float64')
    if z.shape != v.shape:
        raise InvalidArgumentError(f'prox returned shape {z.shape} for input shape {v.shape}.')
    return z


def pg_map(p, x, t):
    x = check_finite('x', x).reshape(p.dim)
    t = check_positive('t', t)

    grad = p.f.grad(x)
    x_plus = prox_apply(p.g, x - t * grad, t)
    g_map = (x - x_plus) / t
    s_plus = (x - x_plus) / t - grad

    return StepRecord(x=x, t=t, grad=grad, g_map=g_map, x_plus=x_plus, s_plus=s_plus)


def recover_subgradient(rec, f):
    grad = f.grad(rec.x)
    s_plus = (rec.x - rec.x_plus) / rec.t - grad
    return check_finite('s_plus', s_plus)


def mapping_norm(p, x, t):
    return pg_map(p, x, t).g_norm


def rho(t, mu, lip):
    """Contraction factor of one PG step on the mapping norm: max{|1 - Lt|, |1 - mu t|}."""
    t = check_positive('t', t)
    return max(abs(1.0 - lip * t), abs(1.0 - mu * t))


def optimal_step(mu, lip):
    """The t minimizing rho(t), where rho = (L - mu) / (L + mu)."""
    return 2.0 / (lip + mu)
