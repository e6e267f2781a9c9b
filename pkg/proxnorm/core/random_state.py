# -*- coding:utf-8 -*-
"""

"""
import numpy as np


def check_random_state(seed):
    """Generator from a seed (64-bit int), an existing Generator, or fresh entropy when None."""
    if seed is None:
        return np.random.default_rng()
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, (int, np.integer)):
        return np.random.default_rng(int(seed))
    raise ValueError(f'Cannot use {seed!r} to seed a random generator.')
