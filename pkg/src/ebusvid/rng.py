"""Deterministic random number streams.

Every stochastic component of the pipeline draws from an `Rng`, a thin wrapper
around numpy's counter-based Philox generator.  Substreams are derived with
`derive(...)` from a stable hash of the parent seed and a token path, so the
same (seed, tokens) pair always yields the same stream regardless of call
order elsewhere in the program.
"""

from __future__ import annotations

import hashlib

import numpy as np

_MASK64 = (1 << 64) - 1


class Rng:
    """Seeded Philox stream with stable derived substreams."""

    def __init__(self, seed: int):
        self.seed = int(seed) & _MASK64
        self._gen = np.random.Generator(np.random.Philox(key=self.seed))

    def derive(self, *tokens) -> "Rng":
        """Child stream keyed on (seed, tokens); tokens are ints or strings."""
        blob = "|".join([str(self.seed)] + [repr(t) for t in tokens])
        digest = hashlib.blake2b(blob.encode("utf-8"), digest_size=8).digest()
        return Rng(int.from_bytes(digest, "little"))

    def uniform(self, low=0.0, high=1.0, size=None, dtype=np.float64):
        return self._gen.uniform(low, high, size).astype(dtype, copy=False)

    def normal(self, loc=0.0, scale=1.0, size=None, dtype=np.float64):
        return self._gen.normal(loc, scale, size).astype(dtype, copy=False)

    def integers(self, low, high, size=None):
        return self._gen.integers(low, high, size)

    def bernoulli(self, p: float) -> bool:
        return bool(self._gen.random() < p)

    def choice(self, seq):
        return seq[int(self._gen.integers(0, len(seq)))]

    def shuffled(self, seq) -> list:
        """New list with the elements of `seq` in a random order."""
        perm = self._gen.permutation(len(seq))
        return [seq[i] for i in perm]

    def permutation(self, n: int) -> np.ndarray:
        return self._gen.permutation(n)
