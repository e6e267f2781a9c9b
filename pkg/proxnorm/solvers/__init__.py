# -*- coding:utf-8 -*-
"""

"""

from ._solvers import pgd_run, fgm_run, apg_run
from .callbacks import SolverCallback, EarlyStoppingCallback, EarlyStoppingError, ProgressLoggingCallback
from .schedule import Schedule, default_schedule, tight_schedule, get_schedule
from .trace import Trace
from ..utils import const

solver_dict = {
    const.SOLVER_PGD: pgd_run,
    'PGD': pgd_run,
    'pgd_run': pgd_run,
    const.SOLVER_FGM: fgm_run,
    'FGM': fgm_run,
    'fgm_run': fgm_run,
    const.SOLVER_APG: apg_run,
    'APG': apg_run,
    'apg_run': apg_run,
}

_solver_names = {
    pgd_run: const.SOLVER_PGD,
    fgm_run: const.SOLVER_FGM,
    apg_run: const.SOLVER_APG,
}


def get_solver(identifier):
    if isinstance(identifier, str):
        fn = solver_dict.get(identifier, None)
        if fn is None:
            raise ValueError(f'Illegal identifier:{identifier}')
        return fn
    elif callable(identifier) and identifier in solver_dict.values():
        return identifier
    else:
        raise ValueError(f'Illegal identifier:{identifier}')


def get_solver_name(identifier):
    """Canonical solver name (pgd, fgm or apg) of any accepted identifier."""
    return _solver_names[get_solver(identifier)]
