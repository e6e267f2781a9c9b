# -*- coding:utf-8 -*-
"""
Named problem kinds, each a seeded (f, g) pair.
"""
import numpy as np

from proxnorm.core import CompositeProblem, InvalidArgumentError
from proxnorm.utils import const, logging, hex_to_array, hex_to_float, array_to_hex, float_to_hex
from .nonsmooth import make_nonsmooth, nonsmooth_from_dict
from .smooth import make_quadratic, make_logistic, smooth_from_dict

logger = logging.get_logger(__name__)

problem_kinds = {
    const.PROBLEM_QUADRATIC: ('quadratic', const.NONSMOOTH_ZERO),
    const.PROBLEM_LASSO: ('quadratic', const.NONSMOOTH_L1),
    const.PROBLEM_BOX: ('quadratic', const.NONSMOOTH_BOX),
    const.PROBLEM_NONNEG: ('quadratic', const.NONSMOOTH_NONNEG),
    const.PROBLEM_LOGISTIC: ('logistic', const.NONSMOOTH_ZERO),
    const.PROBLEM_SPARSE_LOGISTIC: ('logistic', const.NONSMOOTH_L1),
}


def make_problem(kind, n, mu=1.0, lip=10.0, lam=0.5, lo=-1.0, hi=1.0, m=None, seed=0, name=None):
    """
    Quadratic kinds use `mu` and `lip` as the spectrum end points and `lam` as the l1 weight.
    Logistic kinds take their constants from the data, and `lam` is relative to |grad f(0)|_inf,
    so any lam < 1 leaves the origin non-optimal.
    """
    if kind not in problem_kinds:
        raise InvalidArgumentError(f'Unsupported problem kind: {kind!r}, '
                                   f'expected one of {sorted(problem_kinds.keys())}.')

    smooth_kind, nonsmooth_kind = problem_kinds[kind]
    if smooth_kind == 'quadratic':
        f = make_quadratic(n, mu, lip, seed)
    else:
        if m is None:
            m = 10 * n
        logger.debug(f'{kind}: mu and lip follow from the data, m={m}.')
        f = make_logistic(m, n, seed)
        if nonsmooth_kind == const.NONSMOOTH_L1:
            lam = lam * float(np.max(np.abs(f.grad(np.zeros(n)))))

    g = make_nonsmooth(nonsmooth_kind, dim=n, lam=lam, lo=lo, hi=hi)

    if name is None:
        name = f'{kind}-n{n}-seed{seed}'
    return CompositeProblem(f, g, name=name)


def problem_to_dict(p):
    d = {'name': p.name,
         'f': p.f.to_dict(),
         'g': p.g.to_dict(),
         }
    if p.has_reference:
        d['x_star'] = array_to_hex(p.x_star)
        d['phi_bar'] = float_to_hex(p.phi_bar)
    return d


def problem_from_dict(d):
    f = smooth_from_dict(d['f'])
    g = nonsmooth_from_dict(d['g'], dim=f.dim)
    ref_opt = None
    if 'x_star' in d:
        ref_opt = (hex_to_array(d['x_star']), hex_to_float(d['phi_bar']))
    return CompositeProblem(f, g, ref_opt=ref_opt, name=d.get('name'))
