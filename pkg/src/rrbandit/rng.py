"""Seeded random streams with deterministic, order-independent child spawning."""

import numpy as np


class SeededRng:
    """A numpy Generator addressed by (seed, key path).

    child(*key) derives an independent stream whose output depends only on
    the root seed and the accumulated integer key, never on draw order, so
    per-arm and per-run streams can be handed out in any schedule (including
    from worker processes) without losing reproducibility. Generator methods
    (standard_normal, random, integers, ...) are available directly.
    """

    __slots__ = ("seed", "key", "_gen")

    def __init__(self, seed, key=()):
        seed = int(seed)
        if seed < 0:
            raise ValueError("seed must be non-negative")
        self.seed = seed
        self.key = tuple(int(k) for k in key)
        if any(k < 0 for k in self.key):
            raise ValueError("key entries must be non-negative")
        self._gen = np.random.default_rng(
            np.random.SeedSequence(seed, spawn_key=self.key))

    def child(self, *key):
        return SeededRng(self.seed, self.key + key)

    def __getattr__(self, name):
        return getattr(self._gen, name)

    def __repr__(self):
        return f"SeededRng(seed={self.seed}, key={self.key})"
