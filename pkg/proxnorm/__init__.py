# -*- coding:utf-8 -*-
__author__ = 'proxnorm developers'
__version__ = '0.1.0'
