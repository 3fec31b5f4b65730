import numpy as np
import pytest

from src.anticonc.core.rng import MASK64, Rng, derive_seed, splitmix64


class TestSplitmix:
    """64-bit mixing and substream keys."""

    def test_known_value(self):
        # first output of the reference SplitMix64 generator seeded with 0
        assert splitmix64(0) == 0xE220A8397B1DCDAF

    def test_stays_in_range(self):
        assert all(0 <= splitmix64(x) <= MASK64 for x in (0, 1, MASK64, 2**63))

    def test_derive_seed_depends_on_both_inputs(self):
        assert derive_seed(1, 0) != derive_seed(1, 1)
        assert derive_seed(1, 0) != derive_seed(2, 0)


class TestRng:
    """Seeded streams and substreams."""

    def test_same_seed_same_draws(self):
        np.testing.assert_array_equal(Rng(5).normal(10), Rng(5).normal(10))

    def test_seed_is_reduced(self):
        assert Rng(-1).seed == MASK64
        assert Rng(2**64 + 3).seed == 3

    def test_substream_is_order_independent(self):
        root = Rng(42)
        late = root.substream(7).uniform(size=4)
        for t in range(7):
            root.substream(t).uniform(size=100)
        np.testing.assert_array_equal(root.substream(7).uniform(size=4), late)

    def test_substream_does_not_consume_parent(self):
        a, b = Rng(3), Rng(3)
        a.substream(0)
        assert a.uniform() == b.uniform()

    def test_negative_substream(self):
        with pytest.raises(ValueError):
            Rng(0).substream(-1)

    def test_complex_normal_variance(self, rng):
        z = rng.complex_normal(20000)
        assert np.mean(np.abs(z) ** 2) == pytest.approx(1.0, abs=0.05)

    def test_random_phases_unit_modulus(self, rng):
        np.testing.assert_allclose(np.abs(rng.random_phases(50)), 1.0)
