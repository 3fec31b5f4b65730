"""
Counter-based random streams with order-independent per-trial substreams.

Every stochastic operation in the package takes an :class:`Rng`. A run is seeded once with a
64-bit master seed; trial ``i`` always draws from ``Rng(seed).substream(i)``, so results do not
depend on how trials are distributed over workers.
"""

import numpy as np

MASK64 = 0xFFFFFFFFFFFFFFFF


def splitmix64(x: int) -> int:
    """SplitMix64 finalizer: a bijective 64-bit mixing function."""
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(master_seed: int, index: int) -> int:
    """Key of substream ``index``: ``splitmix64(splitmix64(master) ^ splitmix64(index))``."""
    return splitmix64(splitmix64(master_seed & MASK64) ^ splitmix64(index & MASK64))


class Rng:
    """Philox-backed generator identified by a 64-bit seed.

    Parameters
    ----------
    seed : int
        Master seed. Values outside ``[0, 2**64)`` are reduced modulo ``2**64``.
    """

    def __init__(self, seed: int) -> None:
        self.seed = int(seed) & MASK64
        self.generator = np.random.Generator(np.random.Philox(key=self.seed))

    def substream(self, index: int) -> "Rng":
        """Independent child stream; depends only on ``(seed, index)``."""
        if index < 0:
            raise ValueError(f"Substream index must be non-negative, got {index}")
        return Rng(derive_seed(self.seed, index))

    # thin passthroughs used throughout the samplers
    def normal(self, size: int | tuple[int, ...] | None = None, scale: float = 1.0) -> np.ndarray:
        return self.generator.normal(0.0, scale, size)

    def uniform(self, low: float = 0.0, high: float = 1.0, size: int | tuple[int, ...] | None = None) -> np.ndarray:
        return self.generator.uniform(low, high, size)

    def integers(self, low: int, high: int, size: int | tuple[int, ...] | None = None) -> np.ndarray:
        return self.generator.integers(low, high, size)

    def complex_normal(self, size: int | tuple[int, ...]) -> np.ndarray:
        """Complex Gaussian entries with independent Re, Im of variance 1/2 (E|z|^2 = 1)."""
        scale = np.sqrt(0.5)
        return self.generator.normal(0.0, scale, size) + 1j * self.generator.normal(0.0, scale, size)

    def random_phases(self, size: int | tuple[int, ...]) -> np.ndarray:
        return np.exp(1j * self.generator.uniform(-np.pi, np.pi, size))

    def __repr__(self) -> str:
        return f"Rng(seed={self.seed:#018x})"
