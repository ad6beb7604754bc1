"""Random colour generators for the tests, independent of ``tripolar.checks``."""

import numpy as np

from tripolar.colourspace import Colour
from tripolar.spectra import DEFAULT_GRID


def rand_q(rng, n=3):
    q = rng.uniform(0.0, 3.0, n)
    q[rng.random(n) < 0.1] = 0.0
    return q


def rand_eps(rng, grid=DEFAULT_GRID, scale=1.0):
    f = grid.positions()
    mu = rng.uniform(grid.start, grid.stop, (3, 1))
    sigma = rng.uniform(5.0, 80.0, (3, 1))
    amp = rng.normal(0.0, scale, (3, 1))
    return amp * np.exp(-0.5 * ((f - mu) / sigma) ** 2) + rng.normal(0.0, 0.1 * scale, (3, grid.count))


def rand_colour(rng, square=1, grid=DEFAULT_GRID):
    return Colour(square, rand_q(rng), rand_eps(rng, grid), grid)


def rand_singular(rng, square=1, grid=DEFAULT_GRID):
    return Colour(square, np.full(3, rng.uniform(0, 3)), rand_eps(rng, grid, 10.0), grid)


def rand_nonsingular(rng, square=1, grid=DEFAULT_GRID, margin=0.25):
    while True:
        q = rand_q(rng)
        if q.max() - q.min() >= margin:
            return Colour(square, q, rand_eps(rng, grid), grid)


def rand_grey(rng, square=1, grid=DEFAULT_GRID):
    e = rand_eps(rng, grid)[0]
    return Colour(square, np.full(3, rng.uniform(0, 3)), np.stack([e, e, e]), grid)
