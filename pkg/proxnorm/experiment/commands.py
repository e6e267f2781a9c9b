# -*- coding:utf-8 -*-
"""
The gen, run, compare and sweep commands.
"""
import os

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from proxnorm.certificates import run_checks, reports_to_dict, reports_to_df, apg_constant, \
    pgd_envelope, apg_envelope
from proxnorm.conf import snapshot
from proxnorm.core import FixtureMismatchError, InvalidArgumentError, ToleranceCfg
from proxnorm.oracles import reference_solve, OracleCfg
from proxnorm.solvers import get_solver, get_schedule, ProgressLoggingCallback, EarlyStoppingCallback
from proxnorm.utils import const, logging, tic_toc, get_storage
from . import io as fio
from .cfg import ExperimentCfg
from .config import ExperimentConfig

logger = logging.get_logger(__name__)


def _storage(config):
    return get_storage(root=config.output if config.output else None)


@tic_toc()
def cmd_gen(config):
    """Problem JSON plus reference JSON, deterministic given the seed."""
    storage = _storage(config)
    p = config.make_problem()
    sol = reference_solve(p)
    p = p.with_reference(sol.x_star, sol.phi_bar)

    paths = fio.write_fixture(storage, config.fixture_name, p, sol, config.problem_params())
    logger.info(f'fixture {p.name}: residual={sol.residual:.3e}, phi_bar={sol.phi_bar!r}, files={paths}')
    return paths


def _resolve_fixture(config, storage):
    path = config.fixture if config.fixture else f'{config.fixture_name}{fio.PROBLEM_SUFFIX}'
    if not storage.exists(path):
        raise FileNotFoundError(f'fixture not found: {storage.to_path(path)}, run `proxnorm gen` first.')
    return path


@tic_toc()
def cmd_run(config):
    """
    Solver trace (JSON and CSV) and the report of the requested checks.
    Returns EXIT_OK when every check passes and EXIT_CHECK_FAILED otherwise.
    """
    storage = _storage(config)
    p, _ = fio.read_fixture(storage, _resolve_fixture(config, storage))
    config.validate_run(smooth_only=p.g.is_zero)

    callbacks = [ProgressLoggingCallback(every=ExperimentCfg.log_every)]
    if config.early_stop > 0:
        callbacks.append(EarlyStoppingCallback(config.early_stop))

    x0 = np.zeros(p.dim)
    solver = get_solver(config.solver)
    sched = None
    if config.solver == const.SOLVER_PGD:
        trace = solver(p, x0, config.eta, config.K, callbacks=callbacks)
    else:
        sched = get_schedule(config.schedule, p.lip)
        target = p.f if config.solver == const.SOLVER_FGM else p
        trace = solver(target, x0, sched, config.K, callbacks=callbacks)
    trace.problem = p.name

    reports = run_checks(config.checks, p, trace=trace, sched=sched, samples=config.samples, seed=config.seed)

    run_name = config.run_name if config.run_name else f'{p.name}-{config.solver}'
    trace_paths = fio.write_trace(storage, run_name, trace)
    reports_dict = reports_to_dict(reports)
    reports_dict['config'] = config.to_dict()
    reports_dict['settings'] = snapshot(ToleranceCfg, OracleCfg)
    report_path = fio.write_reports(storage, run_name, reports_dict)

    if reports:
        print(reports_to_df(reports).to_string(index=False))
    passed = reports_dict['passed']
    logger.info(f'run {run_name}: {"passed" if passed else "FAILED"}, files={trace_paths + (report_path,)}')
    return const.EXIT_OK if passed else const.EXIT_CHECK_FAILED


def compare_frame(traces, p):
    """
    Per k: |G| of each trace, the running min of |G|^2 and its envelope, the squared PGD
    bound L (phi(x^0) - phi_bar) / (eta k) or 192 L C~ / ((k+1)(k+2)(2k+3)).
    Cells without a value (PGD at k = 0, k past a shorter trace) stay empty.
    """
    if len(traces) < 2:
        raise InvalidArgumentError('compare needs at least two traces.')
    for trace in traces:
        if trace.problem != p.name or trace.lip != p.lip:
            raise FixtureMismatchError(f'trace of {trace.problem!r} does not belong to fixture {p.name!r}.')

    K = max(t.K for t in traces)
    df = pd.DataFrame({'k': np.arange(K + 1)})

    labels = []
    for i, trace in enumerate(traces):
        label = trace.solver if trace.solver not in labels else f'{trace.solver}{i}'
        labels.append(label)

        g_norm = np.full(K + 1, np.nan)
        min_sq = np.full(K + 1, np.nan)
        envelope = np.full(K + 1, np.nan)
        n = len(trace)
        g_norm[:n] = trace.g_norm
        min_sq[:n] = np.minimum.accumulate(np.square(trace.g_norm))

        if trace.solver == const.SOLVER_PGD:
            gap0 = trace.phi_x[0] - p.phi_bar
            for k in range(1, n):
                envelope[k] = pgd_envelope(k, trace.lip, trace.eta, gap0)
        else:
            c_tilde = apg_constant(trace, p, get_schedule(trace.schedule, trace.lip))
            for k in range(n):
                envelope[k] = apg_envelope(k, trace.lip, c_tilde)

        df[f'{label}_g_norm'] = g_norm
        df[f'{label}_min_g_norm_sq'] = min_sq
        df[f'{label}_envelope'] = envelope

    return df


@tic_toc()
def cmd_compare(trace_paths, fixture, output='', name=None):
    storage = get_storage(root=output if output else None)
    p, _ = fio.read_fixture(storage, fixture)
    traces = [fio.read_trace(storage, path) for path in trace_paths]

    df = compare_frame(traces, p)
    if name is None:
        name = f'{p.name}-' + '-'.join(t.solver for t in traces)
    path = fio.write_csv(storage, f'{name}{fio.COMPARE_SUFFIX}', df, const.COMPARE_CSV_SCHEMA)
    logger.info(f'compare {name}: {path}')
    return path


def _sweep_one(config_path, output):
    config = ExperimentConfig.from_file(config_path)
    stem = os.path.splitext(os.path.basename(config_path))[0]
    config.override(output=os.path.join(output, stem) if output else stem)

    storage = _storage(config)
    if not config.fixture and not storage.exists(f'{config.fixture_name}{fio.PROBLEM_SUFFIX}'):
        cmd_gen(config)
    return cmd_run(config)


@tic_toc()
def cmd_sweep(config_paths, output='', n_jobs=None):
    """Each config runs in its own worker and output directory; returns the worst exit code."""
    if n_jobs is None:
        n_jobs = ExperimentCfg.n_jobs
    if len(config_paths) == 0:
        raise InvalidArgumentError('sweep needs at least one config file.')

    codes = Parallel(n_jobs=n_jobs)(delayed(_sweep_one)(path, output) for path in config_paths)
    for path, code in zip(config_paths, codes):
        logger.info(f'sweep {path}: exit {code}')
    return max(codes) if codes else const.EXIT_OK
