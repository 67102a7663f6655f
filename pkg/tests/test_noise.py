import numpy as np
import pytest

from syntheon.noise import cellular, cellular_feature, hash64, perlin, white


class TestWhite:
    def test_deterministic(self):
        x, y = np.meshgrid(np.arange(32), np.arange(32))
        np.testing.assert_array_equal(white(42, x, y), white(42, x, y))

    def test_seed_changes_field(self):
        x, y = np.meshgrid(np.arange(32), np.arange(32))
        assert not np.array_equal(white(1, x, y), white(2, x, y))

    def test_uniform_ks(self):
        # KS statistic against U(0,1) below 0.01 for 1e5 draws
        n = 100_000
        xs = np.arange(n)
        draws = np.sort(white(7, xs, np.zeros_like(xs)))
        ecdf_hi = np.arange(1, n + 1) / n
        ecdf_lo = np.arange(0, n) / n
        ks = max(np.max(ecdf_hi - draws), np.max(draws - ecdf_lo))
        assert ks < 0.01

    def test_range(self):
        v = white(3, np.arange(10_000), np.arange(10_000) * 7)
        assert v.min() >= 0.0 and v.max() < 1.0


class TestPerlin:
    def test_zero_at_lattice(self):
        # noise-space integer lattice: pixel coords k/freq
        freq = 0.25
        k = np.arange(-8, 9, dtype=float)
        vals = perlin(99, freq, k / freq, (k * 3) / freq)
        np.testing.assert_allclose(vals, 0.0, atol=1e-12)

    def test_zero_at_lattice_fractal(self):
        freq = 0.5
        vals = perlin(5, freq, np.arange(10) / freq, np.zeros(10), octaves=4)
        np.testing.assert_allclose(vals, 0.0, atol=1e-12)

    def test_deterministic(self):
        assert perlin(1, 0.05, 12.3, 4.5) == perlin(1, 0.05, 12.3, 4.5)

    def test_range_and_mean(self):
        rng = np.random.default_rng(0)
        x = rng.uniform(0, 1000, 100_000)
        y = rng.uniform(0, 1000, 100_000)
        v = perlin(17, 0.037, x, y, octaves=4)
        assert v.min() >= -1.0 and v.max() <= 1.0
        assert abs(v.mean()) < 0.02

    def test_invalid_frequency(self):
        with pytest.raises(ValueError):
            perlin(1, 0.0, 0.0, 0.0)


class TestCellular:
    def test_zero_at_feature_point(self):
        fx, fy = cellular_feature(31, 4, 9)
        # sample exactly at the feature point (freq 1: pixel == noise space)
        assert cellular(31, 1.0, float(fx), float(fy)) == pytest.approx(0.0, abs=1e-12)

    def test_nonnegative(self):
        x, y = np.meshgrid(np.arange(64), np.arange(64))
        v = cellular(8, 0.08, x, y)
        assert (v >= 0).all()

    def test_lipschitz(self):
        # min-distance fields are 1-Lipschitz in noise space
        freq = 0.07
        rng = np.random.default_rng(2)
        x = rng.uniform(0, 500, 5000)
        y = rng.uniform(0, 500, 5000)
        delta = 0.25
        a = cellular(10, freq, x, y)
        b = cellular(10, freq, x + delta, y)
        assert np.max(np.abs(a - b)) <= freq * delta + 1e-9

    def test_deterministic(self):
        assert cellular(3, 0.05, 17.2, 33.1) == cellular(3, 0.05, 17.2, 33.1)


class TestHash64:
    def test_stable(self):
        assert hash64(1, 2, 3) == hash64(1, 2, 3)
        assert hash64(1, 2, 3) != hash64(1, 2, 4)
        assert hash64(0) != hash64(1)

    def test_negative_inputs_ok(self):
        assert isinstance(hash64(-5, 7), int)
