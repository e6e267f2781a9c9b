# -*- coding:utf-8 -*-
"""

"""

from ._fsutils import get_storage, OutputStorage
from ._tic_tok import tic_toc, report as tic_toc_report, report_as_dataframe as tic_toc_report_as_dataframe
from .common import to_repr, get_params, float_to_hex, hex_to_float, array_to_hex, hex_to_array
