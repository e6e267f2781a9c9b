# -*- coding:utf-8 -*-
"""

"""
from proxnorm.utils import logging, to_repr

logger = logging.get_logger(__name__)


class SolverCallback(object):
    def __init__(self):
        pass

    def on_run_start(self, solver, trace):
        pass

    def on_iteration_end(self, solver, trace, k):
        pass

    def on_run_end(self, solver, trace):
        pass

    def __repr__(self):
        return to_repr(self)


class EarlyStoppingError(RuntimeError):
    def __init__(self, *arg):
        self.args = arg


class EarlyStoppingCallback(SolverCallback):
    """Stops a run once the mapping norm drops to `tol`."""

    def __init__(self, tol):
        super(EarlyStoppingCallback, self).__init__()
        self.tol = tol

    def on_iteration_end(self, solver, trace, k):
        if trace.g_norm[k] <= self.tol:
            msg = f'{solver}: |G(x^{k})| = {trace.g_norm[k]:.3e} <= {self.tol}, early stopping.'
            if logger.is_info_enabled():
                logger.info(msg)
            raise EarlyStoppingError(msg)


class ProgressLoggingCallback(SolverCallback):
    def __init__(self, every=100):
        super(ProgressLoggingCallback, self).__init__()
        self.every = every

    def on_run_start(self, solver, trace):
        logger.info(f'{solver} start, lip={trace.lip}, step={trace.step}')

    def on_iteration_end(self, solver, trace, k):
        logger.log_every_n(logging.INFO, f'{solver} k={k} |G|={trace.g_norm[k]:.6e} phi={trace.phi_x[k]:.12g}',
                           self.every)

    def on_run_end(self, solver, trace):
        logger.info(f'{solver} done, K={trace.K}, |G(x^K)|={trace.g_norm[-1]:.6e}')
