# -*- coding:utf-8 -*-
"""

"""
import os
import tempfile
import time

test_output_dir = tempfile.mkdtemp(prefix=time.strftime("proxnorm_test_%m%d%H%M_"))

os.environ['PROXNORM_OUTPUT'] = test_output_dir
