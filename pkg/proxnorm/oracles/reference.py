# -*- coding:utf-8 -*-
"""
Reference minimizer x* and optimal value phi_bar of a composite problem.
"""
import numpy as np
from scipy import optimize

from proxnorm.core import NoReferenceError, InvalidArgumentError, check_finite, pg_map
from proxnorm.utils import logging, tic_toc, array_to_hex, hex_to_array, float_to_hex, hex_to_float, const
from .cfg import OracleCfg

logger = logging.get_logger(__name__)


class ReferenceSolution(object):
    def __init__(self, x_star, phi_bar, residual, iterations=0, method='pgd', cross_check=None):
        self.x_star = x_star
        self.phi_bar = phi_bar
        self.residual = residual
        self.iterations = iterations
        self.method = method
        self.cross_check = cross_check

    def to_dict(self):
        return {'schema': const.REFERENCE_SCHEMA,
                'x_star': array_to_hex(self.x_star),
                'phi_bar': float_to_hex(self.phi_bar),
                'residual': float_to_hex(self.residual),
                'iterations': self.iterations,
                'method': self.method,
                'cross_check': None if self.cross_check is None else float_to_hex(self.cross_check),
                }

    @staticmethod
    def from_dict(d):
        if d.get('schema') != const.REFERENCE_SCHEMA:
            raise InvalidArgumentError(f'Unsupported reference schema: {d.get("schema")!r}')
        cross_check = d.get('cross_check')
        return ReferenceSolution(hex_to_array(d['x_star']), hex_to_float(d['phi_bar']),
                                 hex_to_float(d['residual']), d.get('iterations', 0), d.get('method', 'pgd'),
                                 None if cross_check is None else hex_to_float(cross_check))

    def __repr__(self):
        return f'ReferenceSolution(phi_bar={self.phi_bar!r}, residual={self.residual!r}, ' \
               f'iterations={self.iterations}, method={self.method!r})'


def _newton_warm_start(f, x0):
    hess = getattr(f, 'hess', None)
    if hess is None:
        return x0
    result = optimize.minimize(f.eval, x0, jac=f.grad, hess=hess, method='Newton-CG',
                               options={'xtol': 1e-12, 'maxiter': 200})
    logger.debug(f'Newton-CG warm start: {result.message}, nit={result.nit}')
    return result.x if np.all(np.isfinite(result.x)) else x0


@tic_toc()
def reference_solve(p, x0=None, tol=None, max_iter=None):
    """
    PGD at t = 1/L until |G(x, 1/L)| <= tol.

    Smooth-only problems are warm started with Newton-CG, except quadratics, which
    are cross-checked against a direct linear solve instead.
    """
    if tol is None:
        tol = OracleCfg.reference_tol
    if max_iter is None:
        max_iter = OracleCfg.reference_max_iter

    x = np.zeros(p.dim) if x0 is None else check_finite('x0', x0).reshape(p.dim).copy()

    direct = None
    method = 'pgd'
    if p.g.is_zero:
        minimizer = getattr(p.f, 'minimizer', None)
        if minimizer is not None:
            if p.mu > 0:
                direct = minimizer()
        else:
            x = _newton_warm_start(p.f, x)
            method = 'newton-cg+pgd'

    t = 1.0 / p.lip
    rec = pg_map(p, x, t)
    it = 0
    while rec.g_norm > tol:
        if it >= max_iter:
            raise NoReferenceError(f'reference solve of {p.name} stopped at the iteration cap {max_iter}, '
                                   f'|G| = {rec.g_norm:.3e} > {tol}.')
        x = rec.x_plus
        rec = pg_map(p, x, t)
        it += 1
        logger.log_every_n(logging.DEBUG, f'reference solve it={it} |G|={rec.g_norm:.3e}', 10000)

    cross_check = None
    if direct is not None:
        cross_check = float(np.linalg.norm(x - direct))
        if cross_check > 1e-10 * max(1.0, float(np.linalg.norm(direct))):
            logger.warning(f'reference solve of {p.name} disagrees with the direct linear solve '
                           f'by {cross_check:.3e}.')

    sol = ReferenceSolution(x, p.phi(x), rec.g_norm, iterations=it, method=method, cross_check=cross_check)
    logger.info(f'reference solve of {p.name}: {sol}')
    return sol


def with_reference(p, x0=None, **kwargs):
    """The problem with its reference optimum attached."""
    sol = reference_solve(p, x0=x0, **kwargs)
    return p.with_reference(sol.x_star, sol.phi_bar), sol
