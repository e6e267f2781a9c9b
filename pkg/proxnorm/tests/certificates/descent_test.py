# -*- coding:utf-8 -*-
"""

"""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.strategies import floats, lists

from proxnorm.certificates import check_prox_contract, check_upper_bound, check_ovg, check_norm_monotonicity, \
    check_refined_descent, CheckReport, monotone_steps
from proxnorm.core import CompositeProblem, ProxOracle, OutOfHypothesisError, pg_map, rho, optimal_step
from proxnorm.functions import QuadraticSmooth, L1Norm, BoxIndicator, NonnegIndicator, ZeroFunction, make_problem, \
    make_quadratic, misdeclare, sample_points, sample_steps
from proxnorm.tests.fixtures import unit_quadratic, lasso_1d


def _states(p, count, seed):
    return sample_points(p.dim, count, seed, scale=2.0, g=p.g, zero_prob=0.2)


class Test_ProxContract:
    @settings(max_examples=500, deadline=None)
    @given(lists(floats(min_value=-4.0, max_value=4.0), min_size=4, max_size=4),
           lists(floats(min_value=-4.0, max_value=4.0), min_size=4, max_size=4),
           floats(min_value=0.01, max_value=2.0))
    def test_structured(self, v, v_next, t):
        for g in (L1Norm(0.5, dim=4), BoxIndicator(-1.0, 1.0, dim=4), NonnegIndicator(4), ZeroFunction(4)):
            r = check_prox_contract(g, [v, v_next], t)
            assert r.passed, (g, r.witnesses)
            assert r.samples == 6

    def test_broken_prox(self):
        g = ProxOracle.from_callables(lambda x: 0.0, lambda v, t: 2.0 * v)
        r = check_prox_contract(g, sample_points(3, 50, seed=0), 1.0)
        assert not r.passed
        assert not r.details['nonexpansive']['passed']


class Test_UpperBound:
    def test_problems(self):
        for kind in ('quadratic', 'lasso', 'box', 'nonneg'):
            p = make_problem(kind, 5, seed=1)
            steps = sample_steps(p.lip, 200, seed=2, upper=2.0)
            r = CheckReport.merge([check_upper_bound(p, x, t) for x, t in zip(_states(p, 200, 3), steps)])
            assert r.passed, (kind, r.witnesses)

    def test_lasso_1d(self):
        r = check_upper_bound(lasso_1d(), [0.0], 1.0)
        assert r.details['upper-bound']['worst_margin'] == pytest.approx(0.0, abs=1e-15)

    def test_without_distance_oracle(self):
        g = ProxOracle.from_callables(lambda x: 0.0, lambda v, t: v)
        p = CompositeProblem(make_quadratic(2, 1.0, 2.0, seed=0), g)
        r = check_upper_bound(p, [1.0, 1.0], 0.5)
        assert r.passed and r.samples == 0
        assert r.not_evaluated == ['upper-bound']


    def test_identity_prox_for_l1(self):
        l1 = L1Norm(1.0, dim=1)
        g = ProxOracle.from_callables(l1.eval, lambda v, t: v, subgrad_dist=l1.subgrad_dist)
        p = CompositeProblem(QuadraticSmooth([[1.0]], [2.0], c=2.0), g)
        r = check_upper_bound(p, [0.0], 1.0)
        assert not r.passed
        assert r.details['upper-bound']['worst_margin'] == pytest.approx(-1.0)
        assert len(r.witnesses) == 1


class Test_OVG:
    def test_quadratic_identity(self):
        p = unit_quadratic()
        for t in (0.6, 1.0, 3.0):
            r = check_ovg(p, [0.7], [-1.3], t)
            assert r.passed
            assert r.worst_margin == pytest.approx(0.0, abs=1e-12)

    def test_problems(self):
        for kind in ('lasso', 'box', 'sparse-logistic'):
            p = make_problem(kind, 6, seed=0)
            xs, ys = _states(p, 100, 1), _states(p, 100, 2)
            steps = sample_steps(p.lip, 100, seed=3, upper=3.0)
            r = CheckReport.merge([check_ovg(p, x, y, t) for x, y, t in zip(xs, ys, steps)])
            assert r.passed, (kind, r.witnesses)

    def test_at_minimizer(self):
        p = lasso_1d()
        r = check_ovg(p, p.x_star, [4.0], 1.0)
        assert r.passed


    def test_misdeclared_convexity(self):
        f = make_quadratic(5, 1.0, 10.0, seed=0)
        p = CompositeProblem(misdeclare(f, mu=5.0), ZeroFunction(5))
        x_star = f.minimizer()
        x = x_star + 3.0 * f.eigh()[1][:, 0]
        r = check_ovg(p, x, x_star, 1.0 / p.lip)
        assert not r.passed
        assert r.worst_margin == pytest.approx(4.5 - 22.5, abs=1e-8)
        assert len(r.witnesses) > 0


class Test_NormMonotonicity:
    def test_one_step_convergence(self):
        p = unit_quadratic()
        rec = pg_map(p, [3.0], 1.0)
        assert pg_map(p, rec.x_plus, 1.0).g_norm == 0.0
        assert check_norm_monotonicity(p, [3.0], 1.0).passed

    def test_contraction(self):
        p = make_problem('lasso', 5, mu=1.0, lip=4.0, seed=0)
        for x in _states(p, 100, 0):
            r = check_norm_monotonicity(p, x, 0.4)
            assert r.passed, r.witnesses
            assert r.info['max_ratio'] <= 0.6 + 1e-8

    def test_optimal_step(self):
        p = make_problem('box', 5, mu=1.0, lip=10.0, seed=1)
        t = optimal_step(p.mu, p.lip)
        bound = (p.lip - p.mu) / (p.lip + p.mu)
        assert rho(t, p.mu, p.lip) == pytest.approx(bound)
        for x in _states(p, 100, 1):
            r = check_norm_monotonicity(p, x, t)
            assert r.passed, r.witnesses
            assert r.info['max_ratio'] <= bound + 1e-8

    def test_step_range(self):
        for kind in ('quadratic', 'lasso', 'nonneg', 'sparse-logistic'):
            p = make_problem(kind, 4, seed=2)
            for t in monotone_steps(p.mu, p.lip):
                r = CheckReport.merge([check_norm_monotonicity(p, x, t) for x in _states(p, 50, 3)])
                assert r.passed, (kind, t, r.witnesses)
                assert r.not_evaluated == []


    def test_full_chain(self):
        for kind in ('lasso', 'box'):
            for n in (1, 5, 20):
                mu = 10.0 if n == 1 else 1.0
                p = make_problem(kind, n, mu=mu, lip=10.0, seed=n)
                states = _states(p, 100, n)
                bound = (p.lip - p.mu) / (p.lip + p.mu)
                for t in monotone_steps(p.mu, p.lip):
                    r = CheckReport.merge([check_norm_monotonicity(p, x, t) for x in states])
                    assert r.passed, (kind, n, t, r.witnesses)
                    assert r.not_evaluated == []
                    assert r.samples == 500
                    if t == optimal_step(p.mu, p.lip):
                        assert r.info['max_ratio'] <= bound + 1e-8

    def test_misdeclared_smoothness(self):
        f = make_quadratic(5, 1.0, 10.0, seed=0)
        p = CompositeProblem(misdeclare(f, lip=5.0), ZeroFunction(5))
        x = f.minimizer() + 3.0 * f.eigh()[1][:, -1]
        t = optimal_step(p.mu, p.lip)
        r = check_norm_monotonicity(p, x, t)
        assert not r.passed
        assert not r.details['monotone']['passed']
        assert not r.details['middle-link']['passed']
        assert r.info['max_ratio'] == pytest.approx(7.0 / 3.0)
        assert r.info['max_ratio'] > rho(t, p.mu, p.lip)


class Test_RefinedDescent:
    def test_unit_quadratic(self):
        r = check_refined_descent(unit_quadratic(), [1.0], 1.0)
        assert r.passed
        assert r.details['sdp']['worst_margin'] == pytest.approx(0.0, abs=1e-15)
        assert 'singular-guard' in r.details

    def test_out_of_hypothesis(self):
        p = make_problem('lasso', 3, seed=0)
        with pytest.raises(OutOfHypothesisError):
            check_refined_descent(p, np.zeros(3), 1.5 / p.lip)

    def test_problems(self):
        for kind in ('quadratic', 'lasso', 'box', 'nonneg', 'logistic', 'sparse-logistic'):
            p = make_problem(kind, 5, seed=4)
            steps = sample_steps(p.lip, 100, seed=5, upper=1.0)
            r = CheckReport.merge([check_refined_descent(p, x, t) for x, t in zip(_states(p, 100, 6), steps)])
            assert r.passed, (kind, r.witnesses)
            assert r.details['dominates-compare1']['passed']
            assert r.details['dominates-compare2']['passed']

    def test_convex_forms(self):
        p = make_problem('lasso', 6, mu=0.0, lip=10.0, seed=1)
        r = CheckReport.merge([check_refined_descent(p, x, 1.0 / p.lip) for x in _states(p, 50, 0)])
        assert r.passed and 'dp1' in r.details and 'dp2' not in r.details

        p = make_problem('quadratic', 6, mu=0.0, lip=10.0, seed=1)
        r = CheckReport.merge([check_refined_descent(p, x, 0.5 / p.lip) for x in _states(p, 50, 0)])
        assert r.passed and 'dp2' in r.details

    def test_misdeclared_smoothness(self):
        f = make_quadratic(5, 1.0, 10.0, seed=0)
        p = CompositeProblem(misdeclare(f, lip=5.0), ZeroFunction(5))
        x = f.minimizer() + 3.0 * f.eigh()[1][:, -1]
        r = check_refined_descent(p, x, 1.0 / p.lip)
        assert not r.passed
        assert not r.details['sdp']['passed']
        assert len(r.witnesses) > 0
