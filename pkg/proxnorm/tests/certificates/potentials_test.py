# -*- coding:utf-8 -*-
"""

"""
import numpy as np
import pytest

from proxnorm.certificates import pgd_potential, check_pgd_potential, check_gd_potential, apg_potential, \
    apg_constant, check_apg_potential, check_potential_monotone, rate_bounds, pgd_envelope, apg_envelope
from proxnorm.core import CompositeProblem, InvalidArgumentError, RequiresReferenceError
from proxnorm.functions import QuadraticSmooth, ZeroFunction, make_problem, misdeclare, problem_kinds
from proxnorm.solvers import pgd_run, apg_run, fgm_run, default_schedule, tight_schedule
from proxnorm.tests.fixtures import unit_quadratic, lasso_1d, generated


class Test_PGDPotential:
    def test_lasso_1d(self):
        p = lasso_1d()
        trace = pgd_run(p, [0.0], 1.0, 5)
        values = pgd_potential(trace, p, 1.0)
        assert values[0] == 0.5
        assert values[1:] == [0.0] * 5

    def test_unit_quadratic(self):
        p = unit_quadratic()
        trace = pgd_run(p, [1.0], 1.0, 3)
        assert pgd_potential(trace, p, 1.0) == [0.5, 0.0, 0.0, 0.0]

    def test_monotone(self):
        for kind in problem_kinds.keys():
            p = generated(kind, 10, seed=0)
            for eta in (1.0, 0.5):
                trace = pgd_run(p, np.zeros(10), eta, 1000)
                r = check_pgd_potential(trace, p, eta)
                assert r.passed, (kind, eta, r.witnesses)
                assert r.info['max_increase'] <= 1e-10
                assert len(trace.potential) == 1001

                r = rate_bounds(trace, p)
                assert r.passed, (kind, eta, r.witnesses)
                assert ('gd-gradient' in r.details) == (p.g.is_zero and eta == 1.0)

    def test_needs_reference(self):
        p = make_problem('lasso', 4, seed=0)
        trace = pgd_run(p, np.zeros(4), 1.0, 10)
        with pytest.raises(RequiresReferenceError):
            pgd_potential(trace, p, 1.0)

    def test_eta_mismatch(self):
        p = lasso_1d()
        trace = pgd_run(p, [0.0], 0.5, 5)
        with pytest.raises(InvalidArgumentError):
            pgd_potential(trace, p, 1.0)


class Test_GDPotential:
    def test_smooth_problems(self):
        for kind in ('quadratic', 'logistic'):
            p = generated(kind, 5, seed=1)
            trace = pgd_run(p, np.zeros(5), 1.0, 1000)
            r = check_gd_potential(trace, p)
            assert r.passed, (kind, r.witnesses)

            r = rate_bounds(trace, p)
            assert r.passed, (kind, r.witnesses)
            assert r.details['gd-gradient']['samples'] == 1001

    def test_needs_smooth_problem(self):
        p = lasso_1d()
        trace = pgd_run(p, [0.0], 1.0, 5)
        with pytest.raises(InvalidArgumentError):
            check_gd_potential(trace, p)


class Test_APGPotential:
    def test_start_at_minimizer(self):
        p = lasso_1d()
        sched = default_schedule(p.lip)
        trace = apg_run(p, [1.0], sched, 20)
        assert apg_constant(trace, p, sched) == pytest.approx(0.0, abs=1e-14)
        assert all(abs(c) <= 1e-12 for c in apg_potential(trace, p, sched))
        assert check_apg_potential(trace, p, sched).passed

    def test_lasso_1d(self):
        p = lasso_1d()
        sched = default_schedule(p.lip)
        trace = apg_run(p, [0.0], sched, 50)
        r = check_apg_potential(trace, p, sched)
        assert r.passed, r.witnesses
        c_tilde = r.info['c_tilde']
        for k in range(1, 51):
            assert trace.phi_y[k] - p.phi_bar <= 8 * c_tilde / ((k + 1) * (k + 2)) + 1e-12
        assert rate_bounds(trace, p, sched).passed

    def test_default_schedule(self):
        for kind in ('lasso', 'box', 'sparse-logistic'):
            p = generated(kind, 20, seed=0)
            sched = default_schedule(p.lip)
            trace = apg_run(p, np.zeros(20), sched, 500)
            assert max(trace.g_norm) > 0
            r = check_apg_potential(trace, p, sched)
            assert r.passed, (kind, r.witnesses)
            assert len(trace.potential) == 501

            r = rate_bounds(trace, p, sched)
            assert r.passed, (kind, r.witnesses)
            assert 'objective-closed-form' in r.details and 'min-norm-closed-form' in r.details

    def test_sparse_logistic_starts_away_from_optimum(self):
        p = generated('sparse-logistic', 20, seed=0)
        assert np.any(p.x_star != 0)
        sched = default_schedule(p.lip)
        trace = apg_run(p, np.zeros(20), sched, 500)
        assert trace.g_norm[0] > 0
        assert apg_constant(trace, p, sched) > 0

    def test_tight_schedule(self):
        p = generated('lasso', 20, seed=1)
        sched = tight_schedule(p.lip)
        trace = apg_run(p, np.zeros(20), sched, 200)
        assert check_apg_potential(trace, p, sched).passed
        r = rate_bounds(trace, p, sched)
        assert r.passed
        assert 'objective-closed-form' not in r.details

    def test_fast_gradient_trace(self):
        p = generated('quadratic', 10, seed=2)
        sched = default_schedule(p.lip)
        trace = fgm_run(p.f, np.zeros(10), sched, 200)
        assert check_apg_potential(trace, p, sched).passed
        assert rate_bounds(trace, p, sched).passed

    def test_schedule_mismatch(self):
        p = lasso_1d()
        trace = apg_run(p, [0.0], default_schedule(p.lip), 10)
        with pytest.raises(InvalidArgumentError):
            rate_bounds(trace, p, tight_schedule(p.lip))
        with pytest.raises(InvalidArgumentError):
            rate_bounds(trace, p)
        with pytest.raises(InvalidArgumentError):
            pgd_potential(trace, p, 1.0)


class Test_MisdeclaredSmoothness:
    def _problem(self):
        f = misdeclare(QuadraticSmooth([[1.0]], [0.0]), mu=0.0, lip=0.25)
        return CompositeProblem(f, ZeroFunction(1), name='misdeclared').with_reference([0.0], 0.0)

    def test_apg_potential(self):
        p = self._problem()
        sched = default_schedule(p.lip)
        trace = apg_run(p, [1.0], sched, 20)
        assert trace.x[1][0] == pytest.approx(-1.0) and trace.x[2][0] == pytest.approx(2.5)

        r = check_apg_potential(trace, p, sched)
        assert not r.passed
        assert r.info['c_tilde'] == pytest.approx(1.375)
        assert not r.details['bounded']['passed']
        assert r.witnesses[0]['k'] <= 1

        r = rate_bounds(trace, p, sched)
        assert not r.passed
        assert not r.details['objective']['passed']

    def test_pgd_potentials(self):
        p = self._problem()
        trace = pgd_run(p, [1.0], 1.0, 10)
        assert trace.g_norm[1] == pytest.approx(3.0)

        assert not check_pgd_potential(trace, p, 1.0).passed
        assert not check_gd_potential(trace, p).passed

        r = rate_bounds(trace, p)
        assert not r.passed
        assert not r.details['pgd-squared']['passed']
        assert not r.details['gd-gradient']['passed']


class Test_Envelopes:
    def test_values(self):
        assert pgd_envelope(0, 10.0, 1.0, 0.5) is None
        assert pgd_envelope(2, 10.0, 1.0, 0.5) == 2.5
        assert apg_envelope(0, 1.0, 1.0) == 32.0
        assert apg_envelope(1, 2.0, 1.0) == pytest.approx(192.0 * 2.0 / 30.0)

    def test_monotone(self):
        assert check_potential_monotone([3.0, 2.0, 2.0, 1.0]).passed
        r = check_potential_monotone([3.0, 2.0, 2.5])
        assert not r.passed
        assert r.witnesses[0]['k'] == 2
        assert r.info['max_increase'] == 0.5
