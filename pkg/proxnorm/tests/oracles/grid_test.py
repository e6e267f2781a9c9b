# -*- coding:utf-8 -*-
"""

"""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.strategies import floats

from proxnorm.core import BracketError, InvalidArgumentError
from proxnorm.functions import L1Norm, BoxIndicator, ZeroFunction
from proxnorm.oracles import grid_prox_1d, grid_prox


class Test_GridProx:
    def test_absolute_value(self):
        assert grid_prox_1d(np.abs, 3.0, 1.0, -10.0, 10.0) == pytest.approx(2.0, abs=1e-6)
        assert grid_prox_1d(np.abs, 0.4, 1.0, -10.0, 10.0) == pytest.approx(0.0, abs=1e-6)

    def test_zero(self):
        h = ZeroFunction(1).coordinate(0)
        assert grid_prox_1d(h, 0.37, 2.0, -10.0, 10.0) == pytest.approx(0.37, abs=1e-6)

    def test_scalar_callable(self):
        assert grid_prox_1d(lambda y: 2.0 * abs(y), -5.0, 1.0, -10.0, 10.0) == pytest.approx(-3.0, abs=1e-6)

    def test_indicator(self):
        h = BoxIndicator(0.0, 1.0, dim=1).coordinate(0)
        assert grid_prox_1d(h, 2.0, 1.0, -10.0, 10.0) == pytest.approx(1.0, abs=1e-6)
        assert grid_prox_1d(h, -3.0, 1.0, -10.0, 10.0) == pytest.approx(0.0, abs=1e-6)

    def test_bracket_errors(self):
        with pytest.raises(BracketError):
            grid_prox_1d(np.abs, 30.0, 1.0, -10.0, 10.0)
        with pytest.raises(BracketError):
            grid_prox_1d(BoxIndicator(0.0, 1.0, dim=1).coordinate(0), 5.5, 1.0, 5.0, 6.0)
        with pytest.raises(InvalidArgumentError):
            grid_prox_1d(np.abs, 0.0, 1.0, 1.0, -1.0)

    @settings(max_examples=1000, deadline=None)
    @given(floats(min_value=-5.0, max_value=5.0),
           floats(min_value=0.01, max_value=2.0))
    def test_agrees_with_closed_forms(self, v, t):
        for g in (L1Norm(0.5, dim=1), BoxIndicator(-1.0, 1.0, dim=1)):
            expected = float(g.prox(np.array([v]), t)[0])
            assert grid_prox_1d(g.coordinate(0), v, t, -10.0, 10.0) == pytest.approx(expected, abs=1e-5)

    def test_coordinatewise(self):
        g = L1Norm(1.0, dim=3)
        v = np.array([3.0, -0.5, -2.5])
        assert np.allclose(grid_prox(g, v, 1.0, -10.0, 10.0), g.prox(v, 1.0), rtol=0, atol=1e-5)
