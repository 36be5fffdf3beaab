"""Seedable, splittable random streams backed by the Philox counter-based generator.

Every randomized operation in this package takes an explicit `Stream`. A
stream is identified by (seed, path); `child(i, j, ...)` derives an
independent substream. Work items that may run in parallel must each own a
distinct child, so results never depend on scheduling.
"""

from __future__ import annotations

import numpy as np

__all__ = ["Stream"]


class Stream:
    """A named random stream: master seed plus an integer derivation path."""

    __slots__ = ("seed", "path", "_gen")

    def __init__(self, seed: int, path: tuple[int, ...] = ()):
        if seed < 0:
            raise ValueError(f"seed must be nonnegative, got {seed}")
        self.seed = int(seed)
        self.path = tuple(int(p) for p in path)
        self._gen: np.random.Generator | None = None

    def child(self, *path: int) -> "Stream":
        """Derive the substream at `path` below this stream."""
        return Stream(self.seed, self.path + path)

    @property
    def gen(self) -> np.random.Generator:
        """The underlying generator (created lazily, stateful across calls)."""
        if self._gen is None:
            ss = np.random.SeedSequence(entropy=self.seed, spawn_key=self.path)
            self._gen = np.random.Generator(np.random.Philox(ss))
        return self._gen

    def __repr__(self) -> str:
        return f"Stream(seed={self.seed}, path={self.path})"
