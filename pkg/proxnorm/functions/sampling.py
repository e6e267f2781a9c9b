# -*- coding:utf-8 -*-
"""
Seeded samplers feeding the certificate checks.
"""
import numpy as np

from proxnorm.core import InvalidArgumentError, check_random_state


def sample_points(dim, count, seed=None, scale=1.0, g=None, zero_prob=0.0):
    """
    `count` Gaussian points of scale `scale`.

    With `zero_prob` > 0 each coordinate is set to exactly 0 with that probability, so
    kinks of separable g are hit. With `g` given, points are moved onto dom g by prox_g,
    which is the projection for indicators.
    """
    if count < 1:
        raise InvalidArgumentError(f'`count` must be positive, got {count}.')

    rng = check_random_state(seed)
    points = rng.standard_normal((count, dim)) * scale
    if zero_prob > 0:
        points[rng.uniform(size=points.shape) < zero_prob] = 0.0

    if g is not None:
        points = np.array([p if np.isfinite(g.eval(p)) else g.prox(p, 1.0) for p in points])

    return list(points)


def sample_pairs(dim, count, seed=None, scale=1.0):
    rng = check_random_state(seed)
    xs = sample_points(dim, count, rng, scale=scale)
    ys = sample_points(dim, count, rng, scale=scale)
    return list(zip(xs, ys))


def sample_direction_pairs(direction, count, seed=None, scale=1.0):
    """Pairs (x, y) with x - y along `direction`, e.g. a top eigenvector."""
    rng = check_random_state(seed)
    direction = np.asarray(direction, dtype='float64')
    direction = direction / np.linalg.norm(direction)

    pairs = []
    for _ in range(count):
        y = rng.standard_normal(direction.shape) * scale
        pairs.append((y + rng.uniform(0.5, 2.0) * scale * direction, y))
    return pairs


def sample_steps(lip, count, seed=None, upper=1.0):
    """Step sizes uniform in (0, upper / lip]."""
    rng = check_random_state(seed)
    return list((1.0 - rng.uniform(size=count)) * upper / lip)
