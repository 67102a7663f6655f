import math

import numpy as np
import pytest

from syntheon.geometry import Quaternion
from syntheon.kernels import (FeatureMap, attention_weights, generative_loss,
                              icpe_margin, self_attention, triplet_loss)


class TestTripletLoss:
    def test_negative_equals_anchor(self):
        e_b = np.array([1.0, 2.0])
        assert triplet_loss(e_b, [0.0, 0.0], e_b, m=0.5) == 1.0

    def test_satisfied_margin(self):
        # anchor == positive, m=1, |b-n|^2 = 2 -> max(0, 1-2) = 0
        e = np.array([0.0, 0.0])
        e_n = np.array([1.0, 1.0])
        assert triplet_loss(e, e, e_n, m=1.0) == 0.0

    def test_direct_arithmetic(self):
        got = triplet_loss([0.0, 0.0], [1.0, 0.0], [0.0, 1.0], m=1.0)
        assert got == pytest.approx(0.5, abs=1e-9)

    def test_zero_denominator_error(self):
        e = np.array([1.0, 1.0])
        with pytest.raises(ValueError):
            triplet_loss(e, e, [0.0, 0.0], m=0.0)

    def test_range_and_monotonicity_sweeps(self):
        rng = np.random.default_rng(0)
        for _ in range(1000):
            dim = rng.integers(2, 16)
            e_b = rng.normal(size=dim)
            e_p = rng.normal(size=dim)
            e_n = rng.normal(size=dim)
            m = float(rng.uniform(0.01, 4.0))
            loss = triplet_loss(e_b, e_p, e_n, m)
            assert 0.0 <= loss <= 1.0
            # non-increasing in |b-n|^2: push the negative further out
            further = e_b + (e_n - e_b) * 1.5
            assert triplet_loss(e_b, e_p, further, m) <= loss + 1e-12
            # non-decreasing in |b-p|^2: push the positive further out
            worse_p = e_b + (e_p - e_b) * 1.5
            assert triplet_loss(e_b, worse_p, e_n, m) >= loss - 1e-12

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            triplet_loss([1.0], [1.0, 2.0], [1.0, 2.0], m=1.0)


class TestIcpeMargin:
    def test_same_class_same_pose(self):
        q = Quaternion(1, 0, 0, 0)
        assert icpe_margin(1, 1, q, q, n=3.2) == 0.0

    def test_different_class_fixed_margin(self):
        q = Quaternion(1, 0, 0, 0)
        assert icpe_margin(1, 2, q, q, n=3.2) == 3.2

    def test_same_class_90_degrees(self):
        c = math.cos(math.pi / 4)
        q90 = Quaternion(c, 0, 0, c)
        got = icpe_margin(4, 4, Quaternion(1, 0, 0, 0), q90, n=3.2)
        assert got == pytest.approx(math.pi / 2, abs=1e-12)

    def test_n_must_exceed_pi(self):
        q = Quaternion(1, 0, 0, 0)
        with pytest.raises(ValueError):
            icpe_margin(1, 2, q, q, n=3.1)

    def test_symmetric_and_sign_invariant(self):
        rng = np.random.default_rng(5)
        for _ in range(200):
            a = rng.normal(size=4)
            a /= np.linalg.norm(a)
            b = rng.normal(size=4)
            b /= np.linalg.norm(b)
            qa, qb = Quaternion(*a), Quaternion(*b)
            qa_neg = Quaternion(*(-a))
            m1 = icpe_margin(1, 1, qa, qb, n=3.2)
            assert m1 == pytest.approx(icpe_margin(1, 1, qb, qa, n=3.2), abs=1e-12)
            assert m1 == pytest.approx(icpe_margin(1, 1, qa_neg, qb, n=3.2), abs=1e-9)
            assert 0.0 <= m1 <= math.pi + 1e-12


class TestSelfAttention:
    def test_gamma_zero_identity(self):
        rng = np.random.default_rng(1)
        x = rng.normal(size=(8, 4, 4))
        fm = FeatureMap.with_random_weights(x, gamma=0.0, rng=rng)
        out = self_attention(fm)
        np.testing.assert_array_equal(out, x)

    def test_single_position(self):
        rng = np.random.default_rng(2)
        x = rng.normal(size=(8, 1, 1))
        fm = FeatureMap.with_random_weights(x, gamma=0.7, rng=rng)
        out = self_attention(fm)
        expected = x + 0.7 * (fm.wh @ x.reshape(8, 1)).reshape(8, 1, 1)
        np.testing.assert_allclose(out, expected, atol=1e-12)

    def test_attention_columns_sum_to_one(self):
        rng = np.random.default_rng(3)
        x = rng.normal(size=(4, 2, 2))
        fm = FeatureMap.with_random_weights(x, gamma=1.0, rng=rng)
        beta = attention_weights(fm)
        assert beta.shape == (4, 4)
        assert (beta >= 0).all()
        np.testing.assert_allclose(beta.sum(axis=0), 1.0, atol=1e-6)

    def test_permutation_equivariance(self):
        rng = np.random.default_rng(4)
        x = rng.normal(size=(4, 2, 2))
        fm = FeatureMap.with_random_weights(x, gamma=0.9, rng=rng)
        out = self_attention(fm).reshape(4, 4)
        perm = rng.permutation(4)
        x_perm = x.reshape(4, 4)[:, perm].reshape(4, 2, 2)
        fm_p = FeatureMap(x=x_perm, wf=fm.wf, wg=fm.wg, wh=fm.wh, gamma=fm.gamma)
        out_p = self_attention(fm_p).reshape(4, 4)
        np.testing.assert_allclose(out_p, out[:, perm], atol=1e-6)

    def test_affine_in_gamma(self):
        rng = np.random.default_rng(6)
        x = rng.normal(size=(8, 3, 3))
        outs = []
        for g in (0.0, 0.5, 1.0):
            fm = FeatureMap.with_random_weights(x, gamma=g, rng=np.random.default_rng(9))
            outs.append(self_attention(fm))
        midpoint = (outs[0] + outs[2]) / 2
        np.testing.assert_allclose(outs[1], midpoint, atol=1e-9)

    def test_shape_mismatch(self):
        x = np.zeros((8, 2, 2))
        fm = FeatureMap(x=x, wf=np.zeros((1, 4)), wg=np.zeros((1, 8)),
                        wh=np.zeros((8, 8)), gamma=1.0)
        with pytest.raises(ValueError):
            self_attention(fm)


class TestGenerativeLoss:
    def test_l1_zero_when_equal(self):
        img = np.random.default_rng(0).uniform(size=(8, 8))
        assert generative_loss(img, img, "l1") == 0.0

    def test_l1_unit_difference(self):
        assert generative_loss(np.zeros((4, 4)), np.ones((4, 4)), "l1") == 1.0

    def test_bce_half_is_ln2(self):
        target = np.array([0.0, 1.0, 1.0, 0.0])
        pred = np.full(4, 0.5)
        assert generative_loss(pred, target, "bce") == pytest.approx(math.log(2), abs=1e-12)

    def test_bce_rejects_out_of_range_pred(self):
        with pytest.raises(ValueError):
            generative_loss(np.array([0.0, 0.5]), np.array([0.0, 1.0]), "bce")
        with pytest.raises(ValueError):
            generative_loss(np.array([1.0, 0.5]), np.array([0.0, 1.0]), "bce")

    def test_bce_rejects_nonbinary_target(self):
        with pytest.raises(ValueError):
            generative_loss(np.array([0.5]), np.array([0.5]), "bce")

    def test_l1_triangle_inequality(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            a, b, c = rng.uniform(size=(3, 16))
            ab = generative_loss(a, b, "l1")
            bc = generative_loss(b, c, "l1")
            ac = generative_loss(a, c, "l1")
            assert ac <= ab + bc + 1e-9

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            generative_loss(np.zeros(2), np.zeros(2), "l2")
