# -*- coding:utf-8 -*-
"""

"""
import pytest

from proxnorm.core import InvalidArgumentError
from proxnorm.solvers import Schedule, default_schedule, tight_schedule, get_schedule


class Test_Schedule:
    def test_default_values(self):
        s = default_schedule(1.0)
        assert s.coefficients(0) == (1.0 / 32, 0.25, 0.25)
        assert s.coefficients(3) == (0.5, 1.0, 2.5)
        assert s.lemma_bound(3) == 0.75
        s.validate(1000)

    def test_sum_of_weights(self):
        lip = 3.0
        s = default_schedule(lip)
        for k in range(30):
            assert s.sum_a(k) == pytest.approx((k + 1) * (k + 2) * (2 * k + 3) / (192 * lip), rel=1e-14)

    def test_tight_weights_are_admissible(self):
        s = tight_schedule(2.0)
        for k in range(1, 50):
            a, _, _ = s.coefficients(k)
            assert a == pytest.approx(s.lemma_bound(k), rel=1e-14)
        s.validate(1000)

    def test_broken_schedules(self):
        too_heavy = Schedule(a=lambda k: 1.0, b=lambda k: (k + 1) / 4.0, B=lambda k: (k + 1) * (k + 2) / 8.0,
                             lip=1.0)
        with pytest.raises(InvalidArgumentError):
            too_heavy.validate(5)

        inconsistent = Schedule(a=lambda k: 0.0, b=lambda k: 1.0, B=lambda k: (k + 1) * (k + 2) / 8.0, lip=1.0)
        with pytest.raises(InvalidArgumentError):
            inconsistent.validate(5)

    def test_registry(self):
        assert get_schedule('default', 2.0).lip == 2.0
        assert get_schedule('tight', 2.0).name == 'tight'
        with pytest.raises(InvalidArgumentError):
            get_schedule('nesterov', 1.0)
