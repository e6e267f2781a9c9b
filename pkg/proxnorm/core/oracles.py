# -*- coding:utf-8 -*-
"""
Contracts for the two halves of a composite objective phi = f + g.
"""
from collections import namedtuple

import numpy as np

from proxnorm.utils import to_repr
from .errors import InvalidArgumentError, RequiresReferenceError, check_finite

ReferenceOptimum = namedtuple('ReferenceOptimum', ['x_star', 'phi_bar'])


class SmoothOracle(object):
    """
    Value and gradient access to f in S(mu, L): L-smooth, mu-strongly convex (mu may be 0).
    """
    kind = 'custom'

    def __init__(self, dim, mu, lip):
        if not (isinstance(dim, (int, np.integer)) and dim >= 1):
            raise InvalidArgumentError(f'`dim` must be a positive integer, got {dim!r}.')
        if not (np.isfinite(lip) and lip > 0):
            raise InvalidArgumentError(f'`lip` must be positive, got {lip}.')
        if not (0 <= mu <= lip):
            raise InvalidArgumentError(f'0 <= mu <= lip is required, got mu={mu}, lip={lip}.')

        self.dim = int(dim)
        self.mu = float(mu)
        self.lip = float(lip)

    def eval(self, x):
        raise NotImplementedError

    def grad(self, x):
        raise NotImplementedError

    def __call__(self, x):
        return self.eval(x)

    def to_dict(self):
        raise NotImplementedError(f'{type(self).__name__} is not serializable.')

    @staticmethod
    def from_callables(eval, grad, mu, lip, dim):
        return CallableSmooth(eval, grad, mu, lip, dim)

    def __repr__(self):
        return to_repr(self)


class CallableSmooth(SmoothOracle):
    def __init__(self, eval_fn, grad_fn, mu, lip, dim):
        super(CallableSmooth, self).__init__(dim, mu, lip)
        self.eval_fn = eval_fn
        self.grad_fn = grad_fn

    def eval(self, x):
        return float(self.eval_fn(np.asarray(x, dtype='float64')))

    def grad(self, x):
        return np.asarray(self.grad_fn(np.asarray(x, dtype='float64')), dtype='float64').reshape(self.dim)


class ProxOracle(object):
    """
    Value of g (may be +inf) and its proximal mapping prox_{tg}(v) = argmin_y g(y) + |y - v|^2 / (2t).

    `subgrad_dist(x, w)`, when not None, is the exact min over s in dg(x) of |w + s|.
    """
    kind = 'custom'
    separable = False
    subgrad_dist = None

    def __init__(self, dim=None):
        self.dim = dim

    @property
    def is_zero(self):
        return False

    def eval(self, x):
        raise NotImplementedError

    def prox(self, v, t):
        raise NotImplementedError

    def coordinate(self, i):
        """1-D component g_i of a separable g, as a scalar callable."""
        raise NotImplementedError(f'{type(self).__name__} is not separable.')

    def __call__(self, x):
        return self.eval(x)

    def to_dict(self):
        raise NotImplementedError(f'{type(self).__name__} is not serializable.')

    @staticmethod
    def from_callables(eval, prox, subgrad_dist=None, dim=None):
        return CallableProx(eval, prox, subgrad_dist, dim)

    def __repr__(self):
        return to_repr(self)


class CallableProx(ProxOracle):
    def __init__(self, eval_fn, prox_fn, subgrad_dist_fn=None, dim=None):
        super(CallableProx, self).__init__(dim)
        self.eval_fn = eval_fn
        self.prox_fn = prox_fn
        if subgrad_dist_fn is not None:
            self.subgrad_dist = subgrad_dist_fn

    def eval(self, x):
        return float(self.eval_fn(np.asarray(x, dtype='float64')))

    def prox(self, v, t):
        return np.asarray(self.prox_fn(np.asarray(v, dtype='float64'), t), dtype='float64')


class CompositeProblem(object):
    """
    phi = f + g, with an optional reference minimizer and optimal value.
    """

    def __init__(self, f, g, ref_opt=None, name=None):
        assert isinstance(f, SmoothOracle) and isinstance(g, ProxOracle)

        if g.dim is not None and g.dim != f.dim:
            raise InvalidArgumentError(f'dimension mismatch: f.dim={f.dim}, g.dim={g.dim}.')

        self.f = f
        self.g = g
        self.name = name
        self.ref_opt = None

        if ref_opt is not None:
            if hasattr(ref_opt, 'x_star'):
                x_star, phi_bar = ref_opt.x_star, ref_opt.phi_bar
            else:
                x_star, phi_bar = ref_opt
            self.ref_opt = ReferenceOptimum(check_finite('x_star', x_star).reshape(f.dim), float(phi_bar))

    @property
    def dim(self):
        return self.f.dim

    @property
    def mu(self):
        return self.f.mu

    @property
    def lip(self):
        return self.f.lip

    @property
    def has_reference(self):
        return self.ref_opt is not None

    @property
    def x_star(self):
        if self.ref_opt is None:
            raise RequiresReferenceError(f'problem {self.name or ""} has no reference optimum.')
        return self.ref_opt.x_star

    @property
    def phi_bar(self):
        if self.ref_opt is None:
            raise RequiresReferenceError(f'problem {self.name or ""} has no reference optimum.')
        return self.ref_opt.phi_bar

    def phi(self, x):
        x = np.asarray(x, dtype='float64')
        return self.f.eval(x) + self.g.eval(x)

    def step_size(self, eta=1.0):
        return eta / self.f.lip

    def with_reference(self, x_star, phi_bar, validate=True):
        p = CompositeProblem(self.f, self.g, ReferenceOptimum(x_star, phi_bar), name=self.name)

        if validate:
            from .cfg import ToleranceCfg
            from .mapping import pg_map

            residual = pg_map(p, p.x_star, 1.0 / p.lip).g_norm
            if residual > ToleranceCfg.fixed_point_tol:
                raise InvalidArgumentError(f'x_star is not a fixed point of the PG step, '
                                           f'|G(x_star, 1/L)| = {residual:.3e}.')
        return p

    def __repr__(self):
        return f'CompositeProblem(name={self.name!r}, f={self.f!r}, g={self.g!r}, ' \
               f'has_reference={self.has_reference})'


class StepRecord(object):
    """
    One proximal gradient step at x with step size t.

    x_plus is the prox output, so it is feasible for indicator g. `x_step` is x - t * g_map,
    which matches x_plus to round-off but may leave dom g by an ulp.
    """

    def __init__(self, x, t, grad, g_map, x_plus, s_plus):
        self.x = x
        self.t = t
        self.grad = grad
        self.g_map = g_map
        self.x_plus = x_plus
        self.s_plus = s_plus

    @property
    def g_norm(self):
        return float(np.linalg.norm(self.g_map))

    @property
    def x_step(self):
        return self.x - self.t * self.g_map

    def __repr__(self):
        return f'StepRecord(t={self.t!r}, g_norm={self.g_norm!r}, dim={len(self.x)})'
