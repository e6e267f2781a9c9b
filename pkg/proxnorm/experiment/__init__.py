# -*- coding:utf-8 -*-
"""

"""

from .cfg import ExperimentCfg
from .commands import cmd_gen, cmd_run, cmd_compare, cmd_sweep, compare_frame
from .config import ExperimentConfig
