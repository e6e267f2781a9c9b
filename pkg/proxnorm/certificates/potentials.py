# -*- coding:utf-8 -*-
"""
Potential functions of the three solvers and the rates they imply.
"""
import math

import numpy as np

from proxnorm.core import InvalidArgumentError, Tolerance
from proxnorm.utils import const
from .report import InequalityCheck

CHECK_PGD_POTENTIAL = 'pgd-potential'
CHECK_GD_POTENTIAL = 'gd-potential'
CHECK_APG_POTENTIAL = 'apg-potential'
CHECK_RATES = 'rates'

_MOMENTUM_SOLVERS = (const.SOLVER_APG, const.SOLVER_FGM)


def _sq(v):
    return float(v @ v)


def _check_solver(trace, solvers):
    if trace.solver not in solvers:
        raise InvalidArgumentError(f'expected a trace of {"/".join(solvers)}, got {trace.solver}.')


def _check_schedule(trace, sched):
    if sched is None or trace.schedule != sched.name or trace.lip != sched.lip:
        raise InvalidArgumentError(f'schedule {sched!r} does not match the trace '
                                   f'(schedule={trace.schedule!r}, lip={trace.lip}).')


def _check_eta(trace, eta):
    if trace.eta != eta:
        raise InvalidArgumentError(f'trace was run with eta={trace.eta}, got eta={eta}.')


def check_potential_monotone(values, name='potential', tol=None):
    """C_{k+1} <= C_k for every k, with absolute slack only."""
    if tol is None:
        tol = Tolerance(eps_rel=0.0)
    check = InequalityCheck(name, tol=tol)
    for k in range(len(values) - 1):
        check.le('monotone', values[k + 1], values[k], k=k + 1)
    if len(values) > 1:
        check.note('max_increase', float(np.max(np.diff(values))))
    return check.report()


def pgd_potential(trace, p, eta):
    """C_k = (eta/L) k |G(x^k, eta/L)|^2 + phi(x^k) - phi_bar."""
    _check_solver(trace, (const.SOLVER_PGD,))
    _check_eta(trace, eta)
    phi_bar = p.phi_bar

    return [eta / p.lip * k * gn ** 2 + phi - phi_bar
            for k, gn, phi in zip(trace.k, trace.g_norm, trace.phi_x)]


def gd_potential(trace, p):
    """C_k = (k/L) |grad f(x^k)|^2 + f(x^k) - f*, for gradient descent at t = 1/L."""
    _check_solver(trace, (const.SOLVER_PGD,))
    if not p.g.is_zero or trace.eta != 1.0:
        raise InvalidArgumentError('the gradient descent potential needs g = 0 and eta = 1.')
    phi_bar = p.phi_bar

    return [k / p.lip * gn ** 2 + phi - phi_bar
            for k, gn, phi in zip(trace.k, trace.g_norm, trace.phi_x)]


def apg_constant(trace, p, sched):
    """C~ = a_0 |G(x^0)|^2 + b_0 (phi(y^0) - phi_bar) + L/2 |x* - v^0|^2."""
    a0, b0, _ = sched.coefficients(0)
    return a0 * trace.g_norm[0] ** 2 + b0 * (trace.phi_y[0] - p.phi_bar) \
        + 0.5 * p.lip * _sq(p.x_star - trace.v[0])


def apg_potential(trace, p, sched):
    """C_k = sum_{i <= k} a_i |G(x^i)|^2 + B_k (phi(y^k) - phi_bar)."""
    _check_solver(trace, _MOMENTUM_SOLVERS)
    _check_schedule(trace, sched)
    phi_bar = p.phi_bar

    values = []
    weighted = []
    for k, gn, phi_y in zip(trace.k, trace.g_norm, trace.phi_y):
        a, _, B = sched.coefficients(k)
        weighted.append(a * gn ** 2)
        values.append(math.fsum(weighted) + B * (phi_y - phi_bar))
    return values


def _next_v(trace, sched, k):
    """v^{k+1}, from the trace for k < K and from the update rule at k = K."""
    if k < trace.K:
        return trace.v[k + 1]
    _, b, _ = sched.coefficients(k)
    return trace.v[k] - (b / trace.lip) * trace.g_map[k]


def check_pgd_potential(trace, p, eta, tol=None):
    values = pgd_potential(trace, p, eta)
    trace.potential = values

    report = check_potential_monotone(values, name=CHECK_PGD_POTENTIAL, tol=tol)
    return report


def check_gd_potential(trace, p, tol=None):
    values = gd_potential(trace, p)
    trace.potential = values
    return check_potential_monotone(values, name=CHECK_GD_POTENTIAL, tol=tol)


def check_apg_potential(trace, p, sched, tol=None):
    """
    Per k >= 1: C_k - C_{k-1} <= L/2 (|x* - v^k|^2 - |x* - v^{k+1}|^2), and C_k <= C~.
    """
    values = apg_potential(trace, p, sched)
    trace.potential = values
    c_tilde = apg_constant(trace, p, sched)
    x_star = p.x_star

    check = InequalityCheck(CHECK_APG_POTENTIAL, tol=tol)
    for k in range(len(values)):
        if k >= 1:
            dist = _sq(x_star - trace.v[k])
            dist_next = _sq(x_star - _next_v(trace, sched, k))
            check.le('telescoping', values[k] - values[k - 1], 0.5 * p.lip * (dist - dist_next), k=k)
        check.le('bounded', values[k], c_tilde, k=k)
    check.note('c_tilde', c_tilde)
    return check.report()


def rate_bounds(trace, p, sched=None, tol=None):
    """
    Momentum traces: for k >= 1

        phi(y^k) - phi_bar <= C~ / B_k,  sum_{i<=k} a_i |G(x^i)|^2 <= C~,
        min_{i<=k} |G(x^i)|^2 <= C~ / sum_{i<=k} a_i,

    and for the default schedule the closed forms 8 C~ / ((k+1)(k+2)) and
    192 L C~ / ((k+1)(k+2)(2k+3)).

    PGD traces: (eta k / L) |G(x^k)|^2 <= phi(x^0) - phi_bar, and for g = 0, eta = 1
    |grad f(x^k)|^2 <= 2L (f(x^0) - f*) / (2k + 1). The unsquared form
    |G(x^k)| <= L (phi(x^0) - phi_bar) / (eta k) is counted in `info` only.
    """
    check = InequalityCheck(CHECK_RATES, tol=tol)
    phi_bar = p.phi_bar
    lip = p.lip

    if trace.solver == const.SOLVER_PGD:
        eta = trace.eta
        gap0 = trace.phi_x[0] - phi_bar
        unsquared_violations = 0
        for k in range(1, len(trace)):
            gn = trace.g_norm[k]
            check.le('pgd-squared', eta * k / lip * gn ** 2, gap0, k=k)
            if gn > lip * gap0 / (eta * k) + Tolerance().slack(gn, lip * gap0 / (eta * k)):
                unsquared_violations += 1
        check.note('pgd_unsquared_violations', unsquared_violations)

        if p.g.is_zero and eta == 1.0:
            for k in range(len(trace)):
                check.le('gd-gradient', trace.g_norm[k] ** 2, 2.0 * lip * gap0 / (2 * k + 1), k=k)
        return check.report()

    _check_solver(trace, _MOMENTUM_SOLVERS)
    _check_schedule(trace, sched)

    c_tilde = apg_constant(trace, p, sched)
    check.note('c_tilde', c_tilde)
    closed_form = sched.name == const.SCHEDULE_DEFAULT

    weighted = []
    sum_a = []
    min_g2 = math.inf
    for k in range(len(trace)):
        a, _, B = sched.coefficients(k)
        g2 = trace.g_norm[k] ** 2
        weighted.append(a * g2)
        sum_a.append(a)
        min_g2 = min(min_g2, g2)
        if k == 0:
            continue

        value_gap = trace.phi_y[k] - phi_bar
        total_a = math.fsum(sum_a)
        check.le('objective', value_gap, c_tilde / B, k=k)
        check.le('weighted-norms', math.fsum(weighted), c_tilde, k=k)
        check.le('min-norm', min_g2, c_tilde / total_a, k=k)
        if closed_form:
            check.le('objective-closed-form', value_gap, 8.0 * c_tilde / ((k + 1) * (k + 2)), k=k)
            check.le('min-norm-closed-form', min_g2,
                     192.0 * lip * c_tilde / ((k + 1) * (k + 2) * (2 * k + 3)), k=k)

    return check.report()


def pgd_envelope(k, lip, eta, gap0):
    """L (phi(x^0) - phi_bar) / (eta k), None at k = 0."""
    if k == 0:
        return None
    return lip * gap0 / (eta * k)


def apg_envelope(k, lip, c_tilde):
    """192 L C~ / ((k+1)(k+2)(2k+3))."""
    return 192.0 * lip * c_tilde / ((k + 1) * (k + 2) * (2 * k + 3))
