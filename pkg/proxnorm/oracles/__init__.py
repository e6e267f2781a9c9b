# -*- coding:utf-8 -*-
"""

"""

from .cfg import OracleCfg
from .enumeration import subdiff_enum_dist
from .grid import grid_prox_1d, grid_prox
from .reference import ReferenceSolution, reference_solve, with_reference
