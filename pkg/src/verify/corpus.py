# Copyright (c) 2024 The phigraph developers

"""Reproducible random seed sets for property checks."""

import numpy as np

from .._phigraphcore import SeedSet


CORPUS_SEED = 1729


class SeedCorpus:
    """A fixed list of random `SeedSet` instances.

    Parameters
    ----------
    size : int
        Number of seed sets.

    max_element : int
        Elements are drawn uniformly from ``1..max_element``.

    max_size : int
        Each seed set has between 1 and `max_size` draws (fewer elements
        when draws coincide).

    seed : int
        Seed of the numpy generator; equal seeds give equal corpora.
    """

    def __init__(self, size=500, max_element=10**6, max_size=12, seed=CORPUS_SEED):
        self.size = size
        self.max_element = max_element
        self.max_size = max_size
        self.seed = seed
        self._sample = None

    def sample(self, count=None):
        """Return the first `count` seed sets (all of them by default)."""
        if count is None:
            count = self.size
        rng = np.random.default_rng(self.seed)
        out = []
        for _ in range(count):
            k = rng.integers(1, self.max_size, endpoint=True)
            draws = rng.integers(1, self.max_element, size=k, endpoint=True)
            out.append(SeedSet(draws.tolist()))
        return out

    def __iter__(self):
        if self._sample is None:
            self._sample = self.sample()
        return iter(self._sample)

    def __len__(self):
        return self.size
