# -*- coding:utf-8 -*-
"""
One-sided inequality convention shared by every check:

    lhs >= rhs holds  <=>  lhs - rhs >= -(eps_abs + eps_rel * max(|lhs|, |rhs|))
"""
import math

from .cfg import ToleranceCfg


class Tolerance(object):
    def __init__(self, eps_abs=None, eps_rel=None):
        self.eps_abs = ToleranceCfg.eps_abs if eps_abs is None else float(eps_abs)
        self.eps_rel = ToleranceCfg.eps_rel if eps_rel is None else float(eps_rel)

    def slack(self, lhs, rhs):
        scale = max(abs(lhs), abs(rhs))
        if math.isinf(scale):
            return math.inf
        return self.eps_abs + self.eps_rel * scale

    def holds_ge(self, lhs, rhs):
        if lhs == math.inf or rhs == -math.inf:
            return True
        return lhs - rhs >= -self.slack(lhs, rhs)

    def holds_le(self, lhs, rhs):
        return self.holds_ge(rhs, lhs)

    def __repr__(self):
        return f'Tolerance(eps_abs={self.eps_abs!r}, eps_rel={self.eps_rel!r})'