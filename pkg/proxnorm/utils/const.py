# -*- coding:utf-8 -*-
"""

"""

SOLVER_PGD = 'pgd'
SOLVER_FGM = 'fgm'
SOLVER_APG = 'apg'

PROBLEM_QUADRATIC = 'quadratic'
PROBLEM_LASSO = 'lasso'
PROBLEM_BOX = 'box'
PROBLEM_NONNEG = 'nonneg'
PROBLEM_LOGISTIC = 'logistic'
PROBLEM_SPARSE_LOGISTIC = 'sparse-logistic'

NONSMOOTH_ZERO = 'zero'
NONSMOOTH_L1 = 'l1'
NONSMOOTH_BOX = 'box'
NONSMOOTH_NONNEG = 'nonneg'

SCHEDULE_DEFAULT = 'default'
SCHEDULE_TIGHT = 'tight'

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CHECK_FAILED = 2

FIXTURE_SCHEMA = 'proxnorm-fixture/1'
REFERENCE_SCHEMA = 'proxnorm-reference/1'
TRACE_SCHEMA = 'proxnorm-trace/1'
REPORT_SCHEMA = 'proxnorm-report/1'
TRACE_CSV_SCHEMA = 'trace-csv/1'
COMPARE_CSV_SCHEMA = 'compare-csv/1'

ENV_OUTPUT_ROOT = 'PROXNORM_OUTPUT'
