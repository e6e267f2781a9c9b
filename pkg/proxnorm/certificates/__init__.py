# -*- coding:utf-8 -*-
"""

"""

from .descent import check_prox_contract, check_upper_bound, check_ovg, check_norm_monotonicity, \
    check_refined_descent
from .function_class import check_function_class
from .potentials import pgd_potential, gd_potential, apg_potential, apg_constant, check_potential_monotone, \
    check_pgd_potential, check_gd_potential, check_apg_potential, rate_bounds, pgd_envelope, apg_envelope
from .report import CheckReport, InequalityCheck, reports_to_dict, reports_to_df
from .suite import check_dict, trace_checks, get_check, run_check, run_checks, monotone_steps
