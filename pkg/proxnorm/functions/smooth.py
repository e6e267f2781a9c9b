# -*- coding:utf-8 -*-
"""
Smooth components f with declared (mu, L).
"""
import numpy as np
from scipy import linalg
from scipy.special import expit
from scipy.stats import ortho_group

from proxnorm.core import SmoothOracle, InvalidArgumentError, check_random_state
from proxnorm.utils import array_to_hex, float_to_hex, hex_to_array, hex_to_float, logging

logger = logging.get_logger(__name__)


class QuadraticSmooth(SmoothOracle):
    """
    f(x) = <Ax, x> / 2 - <b, x> + c with A symmetric positive semidefinite.

    mu and lip default to the extreme eigenvalues of A.
    """
    kind = 'quadratic'

    def __init__(self, A, b, c=0.0, mu=None, lip=None):
        A = np.atleast_2d(np.asarray(A, dtype='float64'))
        b = np.atleast_1d(np.asarray(b, dtype='float64'))

        n = A.shape[0]
        if A.shape != (n, n) or b.shape != (n,):
            raise InvalidArgumentError(f'shape mismatch: A{A.shape}, b{b.shape}.')
        if not np.allclose(A, A.T, rtol=0, atol=1e-12 * max(1.0, np.abs(A).max())):
            raise InvalidArgumentError('A must be symmetric.')

        if mu is None or lip is None:
            eigs = linalg.eigvalsh(A)
            if mu is None:
                mu = max(float(eigs[0]), 0.0)
            if lip is None:
                lip = float(eigs[-1])

        super(QuadraticSmooth, self).__init__(n, mu, lip)

        self.A = A
        self.b = b
        self.c = float(c)

    def eval(self, x):
        x = np.asarray(x, dtype='float64')
        return float(0.5 * (x @ (self.A @ x)) - self.b @ x + self.c)

    def grad(self, x):
        return self.A @ np.asarray(x, dtype='float64') - self.b

    def hess(self, x=None):
        return self.A

    def minimizer(self):
        """Unconstrained minimizer, by a direct linear solve (A must be nonsingular)."""
        try:
            return linalg.solve(self.A, self.b, assume_a='sym')
        except (linalg.LinAlgError, ValueError) as e:
            raise InvalidArgumentError(f'A is singular, no unique unconstrained minimizer: {e}') from e

    def eigh(self):
        return linalg.eigh(self.A)

    def to_dict(self):
        return {'type': self.kind,
                'A': array_to_hex(self.A),
                'b': array_to_hex(self.b),
                'c': float_to_hex(self.c),
                'mu': float_to_hex(self.mu),
                'lip': float_to_hex(self.lip),
                }


class LogisticSmooth(SmoothOracle):
    """
    f(x) = (1/m) sum log(1 + exp(-y_i <d_i, x>)), mu = 0, lip = |D|_op^2 / (4m).
    """
    kind = 'logistic'

    def __init__(self, D, y, lip=None):
        D = np.atleast_2d(np.asarray(D, dtype='float64'))
        y = np.asarray(y, dtype='float64').reshape(-1)

        m, n = D.shape
        if y.shape != (m,):
            raise InvalidArgumentError(f'shape mismatch: D{D.shape}, y{y.shape}.')
        if not np.all(np.abs(y) == 1.0):
            raise InvalidArgumentError('labels must be -1 or +1.')

        if lip is None:
            lip = linalg.norm(D, 2) ** 2 / (4.0 * m)

        super(LogisticSmooth, self).__init__(n, 0.0, lip)

        self.D = D
        self.y = y

    @property
    def m(self):
        return self.D.shape[0]

    def _margins(self, x):
        return self.y * (self.D @ np.asarray(x, dtype='float64'))

    def eval(self, x):
        return float(np.mean(np.logaddexp(0.0, -self._margins(x))))

    def grad(self, x):
        return -(self.D.T @ (self.y * expit(-self._margins(x)))) / self.m

    def hess(self, x):
        s = expit(self._margins(x))
        w = s * (1.0 - s)
        return (self.D.T * w) @ self.D / self.m

    def to_dict(self):
        return {'type': self.kind,
                'D': array_to_hex(self.D),
                'y': array_to_hex(self.y),
                'lip': float_to_hex(self.lip),
                }


class MisdeclaredSmooth(SmoothOracle):
    """
    Another oracle's values and gradients under deliberately wrong constants.
    Certificates must reject it.
    """

    def __init__(self, base, mu=None, lip=None):
        super(MisdeclaredSmooth, self).__init__(base.dim,
                                                base.mu if mu is None else mu,
                                                base.lip if lip is None else lip)
        self.base = base
        self.kind = f'{base.kind}-misdeclared'

    def eval(self, x):
        return self.base.eval(x)

    def grad(self, x):
        return self.base.grad(x)


def misdeclare(f, mu=None, lip=None):
    return MisdeclaredSmooth(f, mu=mu, lip=lip)


def make_quadratic(n, mu, lip, seed):
    """
    A = Q diag(lambda) Q^T with seeded orthogonal Q, lambda_1 = mu, lambda_n = lip and
    interior eigenvalues uniform in [mu, lip]; b standard normal.
    """
    if not (isinstance(n, (int, np.integer)) and n >= 1):
        raise InvalidArgumentError(f'`n` must be a positive integer, got {n!r}.')
    if not (lip > 0):
        raise InvalidArgumentError(f'`lip` must be positive, got {lip}.')
    if not (0 <= mu <= lip):
        raise InvalidArgumentError(f'0 <= mu <= lip is required, got mu={mu}, lip={lip}.')
    if n == 1 and mu != lip:
        raise InvalidArgumentError(f'a 1-D quadratic has a single curvature, mu must equal lip, '
                                   f'got mu={mu}, lip={lip}.')

    rng = check_random_state(seed)

    if n == 1:
        Q = np.ones((1, 1))
        lam = np.array([float(lip)])
    else:
        Q = ortho_group.rvs(dim=n, random_state=rng)
        interior = np.sort(rng.uniform(mu, lip, size=n - 2))
        lam = np.concatenate([[mu], interior, [lip]]).astype('float64')

    A = (Q * lam) @ Q.T
    A = 0.5 * (A + A.T)
    b = rng.standard_normal(n)

    return QuadraticSmooth(A, b, mu=float(mu), lip=float(lip))


def make_logistic(m, n, seed, flip=0.1):
    """
    Seeded logistic regression data, non-separable by construction: the first n rows
    are repeated with opposite labels, so f is coercive whenever they span R^n.
    """
    if not (n >= 1 and m >= n):
        raise InvalidArgumentError(f'm >= n >= 1 is required, got m={m}, n={n}.')

    rng = check_random_state(seed)

    D = rng.standard_normal((m, n))
    w = rng.standard_normal(n)
    y = np.where(D @ w >= 0, 1.0, -1.0)
    flipped = rng.uniform(size=m) < flip
    y[flipped] = -y[flipped]

    D = np.vstack([D, D[:n]])
    y = np.concatenate([y, -y[:n]])

    return LogisticSmooth(D, y)


def smooth_from_dict(d):
    kind = d.get('type')
    if kind == QuadraticSmooth.kind:
        return QuadraticSmooth(hex_to_array(d['A']), hex_to_array(d['b']), hex_to_float(d['c']),
                               mu=hex_to_float(d['mu']), lip=hex_to_float(d['lip']))
    elif kind == LogisticSmooth.kind:
        return LogisticSmooth(hex_to_array(d['D']), hex_to_array(d['y']), lip=hex_to_float(d['lip']))
    else:
        raise InvalidArgumentError(f'Unsupported smooth function type: {kind!r}')
