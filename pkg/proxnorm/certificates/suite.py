# -*- coding:utf-8 -*-
"""
Named checks over a problem, optionally with a solver trace.
"""
import zlib

import numpy as np

from proxnorm.core import FixtureMismatchError, RequiresReferenceError, check_random_state, optimal_step
from proxnorm.functions import sample_points, sample_pairs, sample_steps
from proxnorm.utils import const, logging
from .descent import check_prox_contract, check_upper_bound, check_ovg, check_norm_monotonicity, \
    check_refined_descent, CHECK_PROX_CONTRACT, CHECK_UPPER_BOUND, CHECK_OVG, CHECK_NORM_MONOTONE, \
    CHECK_REFINED_DESCENT
from .function_class import check_function_class, CHECK_FUNCTION_CLASS
from .potentials import check_pgd_potential, check_gd_potential, check_apg_potential, rate_bounds, \
    CHECK_PGD_POTENTIAL, CHECK_GD_POTENTIAL, CHECK_APG_POTENTIAL, CHECK_RATES
from .report import CheckReport

logger = logging.get_logger(__name__)


def _states(p, samples, rng):
    return sample_points(p.dim, samples, rng, scale=2.0, g=p.g, zero_prob=0.2)


def monotone_steps(mu, lip):
    return [0.2 / lip, 1.0 / lip, optimal_step(mu, lip), 2.0 / lip]


def _function_class(p, samples, rng, **kwargs):
    return check_function_class(p.f, sample_pairs(p.dim, samples, rng, scale=2.0))


def _prox_contract(p, samples, rng, **kwargs):
    points = sample_points(p.dim, samples, rng, scale=2.0)
    return check_prox_contract(p.g, points, sample_steps(p.lip, samples, rng, upper=2.0))


def _upper_bound(p, samples, rng, **kwargs):
    steps = sample_steps(p.lip, samples, rng, upper=2.0)
    return CheckReport.merge([check_upper_bound(p, x, t) for x, t in zip(_states(p, samples, rng), steps)],
                             name=CHECK_UPPER_BOUND)


def _ovg(p, samples, rng, **kwargs):
    xs = _states(p, samples, rng)
    ys = _states(p, samples, rng)
    if p.has_reference:
        xs[0] = p.x_star
    steps = sample_steps(p.lip, samples, rng, upper=2.0)
    return CheckReport.merge([check_ovg(p, x, y, t) for x, y, t in zip(xs, ys, steps)], name=CHECK_OVG)


def _norm_monotone(p, samples, rng, **kwargs):
    reports = []
    for t in monotone_steps(p.mu, p.lip):
        reports += [check_norm_monotonicity(p, x, t) for x in _states(p, samples, rng)]
    return CheckReport.merge(reports, name=CHECK_NORM_MONOTONE)


def _refined_descent(p, samples, rng, **kwargs):
    steps = sample_steps(p.lip, samples, rng, upper=1.0)
    return CheckReport.merge([check_refined_descent(p, x, t) for x, t in zip(_states(p, samples, rng), steps)],
                             name=CHECK_REFINED_DESCENT)


def _need_trace(name, trace, solvers):
    if trace is None or trace.solver not in solvers:
        raise FixtureMismatchError(f'check {name} needs a {"/".join(solvers)} trace, '
                                   f'got {None if trace is None else trace.solver}.')


def _pgd_potential(p, samples, rng, trace=None, **kwargs):
    _need_trace(CHECK_PGD_POTENTIAL, trace, (const.SOLVER_PGD,))
    return check_pgd_potential(trace, p, trace.eta)


def _gd_potential(p, samples, rng, trace=None, **kwargs):
    _need_trace(CHECK_GD_POTENTIAL, trace, (const.SOLVER_PGD,))
    if not p.g.is_zero or trace.eta != 1.0:
        raise FixtureMismatchError(f'check {CHECK_GD_POTENTIAL} needs g = 0 and eta = 1.')
    return check_gd_potential(trace, p)


def _apg_potential(p, samples, rng, trace=None, sched=None, **kwargs):
    _need_trace(CHECK_APG_POTENTIAL, trace, (const.SOLVER_APG, const.SOLVER_FGM))
    return check_apg_potential(trace, p, sched)


def _rates(p, samples, rng, trace=None, sched=None, **kwargs):
    _need_trace(CHECK_RATES, trace, (const.SOLVER_PGD, const.SOLVER_APG, const.SOLVER_FGM))
    return rate_bounds(trace, p, sched)


check_dict = {
    CHECK_FUNCTION_CLASS: _function_class,
    CHECK_PROX_CONTRACT: _prox_contract,
    CHECK_UPPER_BOUND: _upper_bound,
    CHECK_OVG: _ovg,
    CHECK_NORM_MONOTONE: _norm_monotone,
    CHECK_REFINED_DESCENT: _refined_descent,
    CHECK_PGD_POTENTIAL: _pgd_potential,
    CHECK_GD_POTENTIAL: _gd_potential,
    CHECK_APG_POTENTIAL: _apg_potential,
    CHECK_RATES: _rates,
}

trace_checks = (CHECK_PGD_POTENTIAL, CHECK_GD_POTENTIAL, CHECK_APG_POTENTIAL, CHECK_RATES)
reference_checks = trace_checks


def get_check(name):
    fn = check_dict.get(name, None)
    if fn is None:
        raise FixtureMismatchError(f'Unknown check: {name!r}, expected one of {sorted(check_dict.keys())}.')
    return fn


def run_check(name, p, trace=None, sched=None, samples=100, seed=0):
    fn = get_check(name)
    if name in reference_checks and not p.has_reference:
        raise RequiresReferenceError(f'check {name} needs the reference optimum of {p.name}.')

    rng = check_random_state(seed)
    report = fn(p, samples, rng, trace=trace, sched=sched)
    if logger.is_info_enabled():
        logger.info(f'{report}')
    return report


def run_checks(names, p, trace=None, sched=None, samples=100, seed=0):
    """Each check draws from a stream keyed by `seed` and its own name, so results do not depend on order."""
    return [run_check(name, p, trace=trace, sched=sched, samples=samples,
                      seed=np.random.default_rng([seed, zlib.crc32(name.encode('utf-8'))]))
            for name in names]
