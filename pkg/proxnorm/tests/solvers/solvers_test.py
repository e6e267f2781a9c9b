# -*- coding:utf-8 -*-
"""

"""
import numpy as np
import pytest

from proxnorm.core import InvalidArgumentError, CompositeProblem
from proxnorm.functions import QuadraticSmooth, ZeroFunction, make_problem
from proxnorm.solvers import pgd_run, fgm_run, apg_run, default_schedule, tight_schedule, get_solver, \
    get_solver_name, SolverCallback, EarlyStoppingCallback, Trace
from proxnorm.tests.fixtures import unit_quadratic, lasso_1d


class RecordingCallback(SolverCallback):
    def __init__(self):
        super(RecordingCallback, self).__init__()
        self.events = []

    def on_run_start(self, solver, trace):
        self.events.append(('start', solver))

    def on_iteration_end(self, solver, trace, k):
        self.events.append(('iteration', k))

    def on_run_end(self, solver, trace):
        self.events.append(('end', trace.K))


class Test_PGD:
    def test_unit_quadratic(self):
        trace = pgd_run(unit_quadratic(), [1.0], 1.0, 3)
        assert [x.tolist() for x in trace.x] == [[1.0], [0.0], [0.0], [0.0]]
        assert trace.g_norm == [1.0, 0.0, 0.0, 0.0]
        assert trace.K == 3 and len(trace) == 4
        assert not trace.has_momentum

    def test_lasso_1d(self):
        trace = pgd_run(lasso_1d(), [0.0], 1.0, 3)
        assert [x.tolist() for x in trace.x] == [[0.0], [1.0], [1.0], [1.0]]
        assert trace.phi_x == [2.0, 1.5, 1.5, 1.5]
        assert trace.g_norm[0] == 1.0

    def test_objective_decreases(self):
        p = make_problem('lasso', 20, seed=0)
        trace = pgd_run(p, np.zeros(20), 1.0, 200)
        assert np.all(np.diff(trace.phi_x) <= 1e-12)
        assert trace.g_norm[-1] < 1e-6

    def test_invalid_arguments(self):
        p = unit_quadratic()
        for eta in (0.0, 1.5, -1.0):
            with pytest.raises(InvalidArgumentError):
                pgd_run(p, [1.0], eta, 3)
        with pytest.raises(InvalidArgumentError):
            pgd_run(p, [1.0], 1.0, 0)

    def test_deterministic(self):
        p = make_problem('sparse-logistic', 5, seed=3)
        t1 = pgd_run(p, np.zeros(5), 0.5, 50)
        t2 = pgd_run(p, np.zeros(5), 0.5, 50)
        assert t1.equals(t2)
        t3 = pgd_run(p, np.zeros(5), 1.0, 50)
        assert not t1.equals(t3)


class Test_FGM:
    def test_first_step(self):
        f = QuadraticSmooth([[1.0]], [0.0])
        trace = fgm_run(f, [1.0], default_schedule(1.0), 1)
        assert trace.y[0].tolist() == [0.0]
        assert trace.v[1].tolist() == [0.75]
        assert trace.x[1] == pytest.approx([0.5])
        assert trace.y[1] == pytest.approx([0.0])

    def test_stationary_start(self):
        f = QuadraticSmooth([[1.0]], [1.0])
        trace = fgm_run(f, [1.0], default_schedule(1.0), 10)
        assert all(np.allclose(x, [1.0], rtol=0, atol=1e-14) for x in trace.x)
        assert all(np.allclose(v, [1.0], rtol=0, atol=1e-14) for v in trace.v)

    def test_schedule_mismatch(self):
        f = QuadraticSmooth([[2.0]], [0.0])
        with pytest.raises(InvalidArgumentError):
            fgm_run(f, [1.0], default_schedule(1.0), 10)

    def test_matches_apg_when_g_is_zero(self):
        p = make_problem('quadratic', 5, seed=1)
        sched = default_schedule(p.lip)
        t_fgm = fgm_run(p.f, np.zeros(5), sched, 100)
        t_apg = apg_run(p, np.zeros(5), sched, 100)
        for name in ('x', 'y', 'v', 'g_map'):
            for a, b in zip(getattr(t_fgm, name), getattr(t_apg, name)):
                assert np.allclose(a, b, rtol=0, atol=1e-10)


class Test_APG:
    def test_combination_identity(self):
        p = make_problem('lasso', 10, seed=2)
        sched = default_schedule(p.lip)
        trace = apg_run(p, np.zeros(10), sched, 100)
        for k in range(1, trace.K + 1):
            _, b, B = sched.coefficients(k)
            _, _, B_prev = sched.coefficients(k - 1)
            r = B * trace.x[k] - B_prev * trace.y[k - 1] - b * trace.v[k]
            assert np.linalg.norm(r) <= 1e-10 * max(1.0, B)

    def test_start_at_minimizer(self):
        p = lasso_1d()
        trace = apg_run(p, [1.0], default_schedule(1.0), 20)
        for name in ('x', 'y', 'v'):
            assert all(np.allclose(e, [1.0], rtol=0, atol=1e-12) for e in getattr(trace, name))

    def test_tight_schedule_converges(self):
        p = make_problem('box', 10, seed=4)
        trace = apg_run(p, np.zeros(10), tight_schedule(p.lip), 300)
        assert trace.schedule == 'tight'
        assert min(trace.g_norm) < 0.05 * trace.g_norm[0]

    def test_schedule_must_validate(self):
        p = lasso_1d()
        with pytest.raises(InvalidArgumentError):
            apg_run(p, [0.0], default_schedule(2.0), 10)


class Test_Callbacks:
    def test_events(self):
        cb = RecordingCallback()
        pgd_run(lasso_1d(), [0.0], 1.0, 2, callbacks=[cb])
        assert cb.events == [('start', 'pgd'), ('iteration', 0), ('iteration', 1), ('iteration', 2), ('end', 2)]

    def test_early_stopping(self):
        p = make_problem('lasso', 20, seed=0)
        cb = RecordingCallback()
        trace = pgd_run(p, np.zeros(20), 1.0, 5000, callbacks=[EarlyStoppingCallback(1e-6), cb])
        assert trace.K < 5000
        assert trace.g_norm[-1] <= 1e-6
        assert all(gn > 1e-6 for gn in trace.g_norm[:-1])
        assert cb.events[-1] == ('end', trace.K)

    def test_registry(self):
        assert get_solver('pgd') is pgd_run
        assert get_solver('APG') is apg_run
        assert get_solver(fgm_run) is fgm_run
        with pytest.raises(ValueError):
            get_solver('newton')

    def test_canonical_names(self):
        for name in ('pgd', 'PGD', 'pgd_run', pgd_run):
            assert get_solver_name(name) == 'pgd'
        for name in ('fgm', 'FGM', 'fgm_run'):
            assert get_solver_name(name) == 'fgm'
        assert get_solver_name('APG') == 'apg'
        with pytest.raises(ValueError):
            get_solver_name('ista')


class Test_Trace:
    def test_contiguous(self):
        trace = Trace('pgd', 1.0, 1.0, eta=1.0)
        trace.append(0, [0.0], [1.0], 1.0)
        with pytest.raises(InvalidArgumentError):
            trace.append(2, [0.0], [1.0], 1.0)

    def test_dict_and_frame(self):
        p = make_problem('lasso', 4, seed=0)
        trace = apg_run(p, np.zeros(4), default_schedule(p.lip), 20)
        again = Trace.from_dict(trace.to_dict())
        assert again.equals(trace)
        assert again.problem == p.name

        df = trace.to_df()
        assert list(df.columns) == ['k', 'g_norm', 'phi_x', 'phi_y', 'elapsed']
        assert len(df) == 21

    def test_smooth_problem(self):
        p = CompositeProblem(QuadraticSmooth(np.eye(2), [1.0, 1.0]), ZeroFunction(2))
        trace = pgd_run(p, np.zeros(2), 1.0, 1)
        assert np.allclose(trace.x[1], [1.0, 1.0])
