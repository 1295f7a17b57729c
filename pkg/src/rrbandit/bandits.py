"""Stochastic reward sources over the unit cube. Rewards are losses."""

import math

import numpy as np


class Bandit:
    """Base reward source on [0,1]^d; smaller mean is better.

    mean(x) is the exact-mean oracle and may be unavailable for some
    sources. sample_mean(x, n, rng) must be distributed exactly as the
    average of n independent sample(x, rng) pulls; subclasses override it
    with a sufficient-statistic draw where one exists.
    """

    lipschitz = 1.0
    dimension = 1

    def mean(self, x):
        raise NotImplementedError

    def sample(self, x, rng):
        raise NotImplementedError

    def sample_mean(self, x, n, rng):
        n = int(n)
        if n < 1:
            raise ValueError("need at least one pull")
        total = 0.0
        for _ in range(n):
            total += self.sample(x, rng)
        return total / n


class GaussianBandit(Bandit):
    """Deterministic mean function plus iid Gaussian observation noise.

    With sigma=0 the bandit is an exact oracle and consumes no randomness.
    The n-pull empirical mean is drawn in one shot as N(mean, sigma^2/n),
    which is the exact distribution of the average, so large pull counts
    cost one rng call. Budget accounting still counts n pulls per call.
    """

    def __init__(self, mean_fn, lipschitz=1.0, sigma=1.0, dimension=1):
        if sigma < 0:
            raise ValueError("sigma must be non-negative")
        self._mean_fn = mean_fn
        self.lipschitz = float(lipschitz)
        self.sigma = float(sigma)
        self.dimension = int(dimension)

    def mean(self, x):
        return float(self._mean_fn(x))

    def sample(self, x, rng):
        if self.sigma == 0.0:
            return self.mean(x)
        return self.mean(x) + self.sigma * rng.standard_normal()

    def sample_mean(self, x, n, rng):
        n = int(n)
        if n < 1:
            raise ValueError("need at least one pull")
        if self.sigma == 0.0:
            return self.mean(x)
        return self.mean(x) + self.sigma * rng.standard_normal() / math.sqrt(n)


class CountingBandit(Bandit):
    """Wrapper that ledgers every pull going through the bandit interface.

    Oracle mean() calls are not counted; they are outside the sample budget.
    """

    def __init__(self, inner):
        self.inner = inner
        self.lipschitz = inner.lipschitz
        self.dimension = inner.dimension
        self.count = 0

    def mean(self, x):
        return self.inner.mean(x)

    def sample(self, x, rng):
        self.count += 1
        return self.inner.sample(x, rng)

    def sample_mean(self, x, n, rng):
        self.count += int(n)
        return self.inner.sample_mean(x, n, rng)
