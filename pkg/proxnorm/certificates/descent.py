# -*- coding:utf-8 -*-
"""
One-step inequalities of the proximal gradient mapping.
"""
import math

import numpy as np

from proxnorm.core import ToleranceCfg, InvalidArgumentError, OutOfHypothesisError, \
    check_finite, check_positive, pg_map, prox_apply, rho
from .report import InequalityCheck

CHECK_PROX_CONTRACT = 'prox-contract'
CHECK_UPPER_BOUND = 'upper-bound'
CHECK_OVG = 'ovg'
CHECK_NORM_MONOTONE = 'norm-monotone'
CHECK_REFINED_DESCENT = 'refined-descent'


def _sq(v):
    return float(v @ v)


def _subdiff_dist(p, x, grad):
    """d(0, dphi(x)) through the exact oracle of g, +inf outside dom g."""
    if not math.isfinite(p.g.eval(x)):
        return math.inf
    return float(p.g.subgrad_dist(x, grad))


def check_prox_contract(g, points, steps, tol=None):
    """
    z = prox(v, t) must satisfy g(u) >= g(z) + <(v - z)/t, u - z> and, for the next
    sample v', |prox(v, t) - prox(v', t)| <= |v - v'|. Test points u are the next
    sample and its prox.
    """
    points = [check_finite('v', v) for v in points]
    if len(points) < 2:
        raise InvalidArgumentError('at least two sample points are required.')
    if np.isscalar(steps):
        steps = [steps] * len(points)
    if len(steps) != len(points):
        raise InvalidArgumentError('`steps` must be a scalar or match `points`.')

    check = InequalityCheck(CHECK_PROX_CONTRACT, tol=tol)
    n = len(points)
    for i, (v, t) in enumerate(zip(points, steps)):
        v_next = points[(i + 1) % n]
        z = prox_apply(g, v, t)
        z_next = prox_apply(g, v_next, t)
        s = (v - z) / t
        gz = g.eval(z)
        for u in (v_next, z_next):
            check.ge('subgradient', g.eval(u), gz + float(s @ (u - z)), v=v, t=t, u=u)
        check.le('nonexpansive', np.linalg.norm(z - z_next), np.linalg.norm(v - v_next), v=v, v_next=v_next, t=t)

    return check.report()


def check_upper_bound(p, x, t, tol=None):
    """|G(x, t)| <= d(0, dphi(x)) at x in dom g."""
    check = InequalityCheck(CHECK_UPPER_BOUND, tol=tol)
    if p.g.subgrad_dist is None:
        check.skip('upper-bound')
        return check.report()

    rec = pg_map(p, x, t)
    check.le('upper-bound', rec.g_norm, _subdiff_dist(p, rec.x, rec.grad), x=rec.x, t=t)
    return check.report()


def check_ovg(p, x, y, t, tol=None):
    """
    phi(x) - phi(y - t G(y, t)) >= t (1 - L t / 2) |G(y, t)|^2 + <G(y, t), x - y> + mu/2 |x - y|^2
    """
    x = check_finite('x', x).reshape(p.dim)
    rec = pg_map(p, y, t)
    d = x - rec.x
    G = rec.g_map

    check = InequalityCheck(CHECK_OVG, tol=tol)
    check.ge('ovg',
             p.phi(x) - p.phi(rec.x_plus),
             t * (1.0 - 0.5 * p.lip * t) * _sq(G) + float(G @ d) + 0.5 * p.mu * _sq(d),
             x=x, y=rec.x, t=t)
    return check.report()


def check_norm_monotonicity(p, x, t, tol=None):
    """
    One step x -> x+ and the chain

        |G(x+, t)| <= d(0, dphi(x+)) <= rho(t) |G(x, t)| <= rho(t) d(0, dphi(x))

    with rho(t) = max{|1 - L t|, |1 - mu t|}, plus |grad f(x+) + s+| <= rho(t) |G(x, t)|.
    The distance links need the exact oracle of g and are skipped without it.
    """
    rec = pg_map(p, x, t)
    rec_next = pg_map(p, rec.x_plus, t)
    r = rho(t, p.mu, p.lip)
    g_norm, g_norm_next = rec.g_norm, rec_next.g_norm

    check = InequalityCheck(CHECK_NORM_MONOTONE, tol=tol)
    w = dict(x=rec.x, t=t, rho=r)

    check.le('monotone', g_norm_next, r * g_norm, **w)
    check.le('subgradient-residual', np.linalg.norm(rec_next.grad + rec.s_plus), r * g_norm, **w)

    if p.g.subgrad_dist is None:
        for label in ('lower-link', 'middle-link', 'upper-link'):
            check.skip(label)
    else:
        dist_next = _subdiff_dist(p, rec_next.x, rec_next.grad)
        dist = _subdiff_dist(p, rec.x, rec.grad)
        check.le('lower-link', g_norm_next, dist_next, **w)
        check.le('middle-link', dist_next, r * g_norm, **w)
        check.le('upper-link', r * g_norm, r * dist, **w)

    check.note('max_ratio', g_norm_next / g_norm if g_norm > 0 else 0.0)
    return check.report()


def check_refined_descent(p, x, t, tol=None):
    """
    For 0 < t <= 1/L:

        phi(x) >= phi(x+) + t/2 |G(x, t)|^2 + t / (2(1 - mu t)) |G(x+, t)|^2

    in its mu = 0 and g = 0 forms, and its margin against the classical
    phi(x) >= phi(x+) + t/2 |G(x, t)|^2 and phi(x) >= phi(x+) + L/2 |x+ - x|^2.
    At mu t = 1 the last term is taken as 0 once |G(x+, t)| is below the singular guard.
    """
    t = check_positive('t', t)
    if t > 1.0 / p.lip:
        raise OutOfHypothesisError(f'refined descent needs t <= 1/L = {1.0 / p.lip}, got t={t}.')

    rec = pg_map(p, x, t)
    rec_next = pg_map(p, rec.x_plus, t)
    check = InequalityCheck(CHECK_REFINED_DESCENT, tol=tol)
    w = dict(x=rec.x, t=t)

    phi_x, phi_plus = p.phi(rec.x), p.phi(rec.x_plus)
    gap = phi_x - phi_plus
    first = 0.5 * t * _sq(rec.g_map)
    g2_next = _sq(rec_next.g_map)

    one_minus = 1.0 - p.mu * t
    if one_minus <= 1e-12:
        check.le('singular-guard', math.sqrt(g2_next), ToleranceCfg.singular_guard, **w)
        second = 0.0
        residual_term = 0.0
    else:
        second = t / (2.0 * one_minus) * g2_next
        residual_term = t / (2.0 * one_minus) * _sq(rec_next.grad + rec.s_plus)

    check.ge('sdp', gap, first + second, **w)
    if one_minus > 1e-12:
        check.ge('sdp-subgradient', gap, _sq(rec.x - rec.x_plus) / (2.0 * t) + residual_term, **w)

    if p.mu == 0:
        check.ge('dp1', gap, first + 0.5 * t * g2_next, **w)
        if p.g.is_zero:
            check.ge('dp2', p.f.eval(rec.x) - p.f.eval(rec.x_plus),
                     first + 0.5 * t * _sq(rec_next.grad), **w)

    margin_sdp = gap - (first + second)
    margin_compare1 = gap - first
    margin_compare2 = gap - 0.5 * p.lip * _sq(rec.x_plus - rec.x)
    check.ge('compare1', gap, first, **w)
    check.ge('compare2', gap, 0.5 * p.lip * _sq(rec.x_plus - rec.x), **w)
    if math.isfinite(gap):
        check.le('dominates-compare1', margin_sdp, margin_compare1, **w)
        check.le('dominates-compare2', margin_sdp, margin_compare2, **w)

    return check.report()
