# -*- coding:utf-8 -*-
"""
Scalar sequences (a_k, b_k, B_k) of the accelerated scheme and its potential.
"""
import math

from proxnorm.core import InvalidArgumentError, Tolerance, check_positive
from proxnorm.utils import const, to_repr


class Schedule(object):
    def __init__(self, a, b, B, lip, name='custom'):
        assert callable(a) and callable(b) and callable(B)

        self.a = a
        self.b = b
        self.B = B
        self.lip = check_positive('lip', lip)
        self.name = name

    def coefficients(self, k):
        return self.a(k), self.b(k), self.B(k)

    def sum_a(self, k):
        return math.fsum(self.a(i) for i in range(k + 1))

    def lemma_bound(self, k):
        """Largest a_k the telescoping potential bound allows: (B_k - b_k^2) / (2L)."""
        return (self.B(k) - self.b(k) ** 2) / (2.0 * self.lip)

    def validate(self, K, tol=None):
        """
        Check b_0 = B_0, b_k = B_k - B_{k-1}, B strictly increasing and the weight
        condition a_k <= (B_k - b_k^2) / (2L) for k = 1..K.
        """
        if tol is None:
            tol = Tolerance()

        a0, b0, B0 = self.coefficients(0)
        if not (b0 > 0 and a0 >= 0 and tol.holds_le(b0, B0) and tol.holds_ge(b0, B0)):
            raise InvalidArgumentError(f'schedule {self.name}: b_0 = B_0 > 0 and a_0 >= 0 required, '
                                       f'got a_0={a0}, b_0={b0}, B_0={B0}.')

        B_prev = B0
        for k in range(1, K + 1):
            a, b, B = self.coefficients(k)
            if not B > B_prev:
                raise InvalidArgumentError(f'schedule {self.name}: B must be strictly increasing, '
                                           f'B_{k - 1}={B_prev}, B_{k}={B}.')
            if not (b > 0 and tol.holds_le(b, B - B_prev) and tol.holds_ge(b, B - B_prev)):
                raise InvalidArgumentError(f'schedule {self.name}: b_{k}={b} differs from B_{k} - B_{k - 1}='
                                           f'{B - B_prev}.')
            if not (a >= 0 and tol.holds_le(a, self.lemma_bound(k))):
                raise InvalidArgumentError(f'schedule {self.name}: a_{k}={a} exceeds '
                                           f'(B_k - b_k^2)/(2L)={self.lemma_bound(k)}.')
            B_prev = B

        return self

    def to_dict(self):
        return {'name': self.name, 'lip': self.lip}

    def __repr__(self):
        return to_repr(self, excludes=['a', 'b', 'B'])


def default_schedule(lip):
    """b_k = (k+1)/4, B_k = (k+1)(k+2)/8, a_k = (k+1)^2 / (32L); a_0 follows the same formula."""
    lip = check_positive('lip', lip)
    return Schedule(a=lambda k: (k + 1) ** 2 / (32.0 * lip),
                    b=lambda k: (k + 1) / 4.0,
                    B=lambda k: (k + 1) * (k + 2) / 8.0,
                    lip=lip,
                    name=const.SCHEDULE_DEFAULT)


def tight_schedule(lip):
    """Default b_k, B_k with the largest admissible weights a_k = (k+1)(k+3) / (32L)."""
    lip = check_positive('lip', lip)
    return Schedule(a=lambda k: (k + 1) * (k + 3) / (32.0 * lip),
                    b=lambda k: (k + 1) / 4.0,
                    B=lambda k: (k + 1) * (k + 2) / 8.0,
                    lip=lip,
                    name=const.SCHEDULE_TIGHT)


_schedules = {
    const.SCHEDULE_DEFAULT: default_schedule,
    const.SCHEDULE_TIGHT: tight_schedule,
}


def get_schedule(name, lip):
    fn = _schedules.get(name, None)
    if fn is None:
        raise InvalidArgumentError(f'Unsupported schedule: {name!r}, expected one of {sorted(_schedules.keys())}.')
    return fn(lip)
