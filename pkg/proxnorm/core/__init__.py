# -*- coding:utf-8 -*-
"""

"""

from .cfg import ToleranceCfg
from .errors import ProxnormError, InvalidArgumentError, OutOfHypothesisError, FixtureMismatchError, \
    RequiresReferenceError, NoReferenceError, BracketError, check_finite, check_positive
from .mapping import prox_apply, pg_map, recover_subgradient, mapping_norm, rho, optimal_step
from .oracles import SmoothOracle, ProxOracle, CompositeProblem, StepRecord, ReferenceOptimum
from .random_state import check_random_state
from .tolerance import Tolerance
