# -*- coding:utf-8 -*-
"""

"""

from .nonsmooth import ZeroFunction, L1Norm, BoxIndicator, NonnegIndicator, \
    subgrad_dist_l1, subgrad_dist_box, make_nonsmooth, nonsmooth_from_dict
from .problems import make_problem, problem_kinds, problem_to_dict, problem_from_dict
from .sampling import sample_points, sample_pairs, sample_direction_pairs, sample_steps
from .smooth import QuadraticSmooth, LogisticSmooth, MisdeclaredSmooth, make_quadratic, make_logistic, \
    misdeclare, smooth_from_dict
