"""Reference forward kernels for downstream trainers.

Pure-numpy implementations of the ratio triplet loss with the pose-aware
(ICPE) margin rule, position-wise self-attention over a feature map, and
the generative reconstruction losses (L1 for images, binary cross-entropy
for masks). Forward only: gradients are the trainer's business, and the
attention weight matrices are caller-provided rather than trainable state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import Quaternion, quat_angular_distance


def triplet_loss(e_b, e_p, e_n, m: float) -> float:
    """Ratio triplet loss max(0, 1 - |b-n|^2 / (|b-p|^2 + m)).

    e_b is the anchor embedding, e_p a positive (similar) sample, e_n a
    negative one; m >= 0 is the margin. Value lies in [0, 1].
    """
    e_b, e_p, e_n = (np.asarray(e, dtype=np.float64) for e in (e_b, e_p, e_n))
    if not (e_b.shape == e_p.shape == e_n.shape):
        raise ValueError("embeddings must share one dimension")
    if m < 0:
        raise ValueError("margin must be non-negative")
    d_pos = float(np.sum((e_b - e_p) ** 2))
    d_neg = float(np.sum((e_b - e_n) ** 2))
    denom = d_pos + m
    if denom == 0.0:
        raise ValueError("degenerate triplet: anchor equals positive with zero margin")
    return max(0.0, 1.0 - d_neg / denom)


def icpe_margin(class_b: int, class_p: int, q_b: Quaternion, q_p: Quaternion,
                n: float) -> float:
    """Margin for instance classification + pose estimation triplets.

    Same class: the quaternion angular distance 2*arccos(|q_b . q_p|), in
    [0, pi]. Different classes: the fixed inter-class margin n, which must
    exceed pi so class separation always dominates pose separation.
    """
    if n <= math.pi:
        raise ValueError(f"inter-class margin must exceed pi, got {n}")
    if class_b == class_p:
        return quat_angular_distance(q_b, q_p)
    return float(n)


@dataclass(frozen=True)
class FeatureMap:
    """C x H x W feature map plus the projection weights for self-attention.

    wf and wg project to the reduced key/query dimension (C//8 by
    convention), wh maps values back to C channels, and gamma scales the
    attended residual.
    """

    x: np.ndarray       # (C, H, W)
    wf: np.ndarray      # (C_bar, C)
    wg: np.ndarray      # (C_bar, C)
    wh: np.ndarray      # (C, C)
    gamma: float

    @staticmethod
    def with_random_weights(x: np.ndarray, gamma: float, rng=None) -> "FeatureMap":
        rng = rng or np.random.default_rng(0)
        c = x.shape[0]
        c_bar = max(c // 8, 1)
        return FeatureMap(x=np.asarray(x, dtype=np.float64),
                          wf=rng.normal(scale=0.02, size=(c_bar, c)),
                          wg=rng.normal(scale=0.02, size=(c_bar, c)),
                          wh=rng.normal(scale=0.02, size=(c, c)),
                          gamma=gamma)


def self_attention(fm: FeatureMap) -> np.ndarray:
    """Position-wise self-attention output, same C x H x W shape as the input.

    With x flattened to C x N columns: scores s[i, j] = (wf x)_i . (wg x)_j,
    attention beta[i, j] = softmax over i of s[i, j] (each output position j
    is a convex combination over value positions i), and the output is
    x + gamma * (wh x) @ beta.
    """
    x = np.asarray(fm.x, dtype=np.float64)
    if x.ndim != 3:
        raise ValueError("feature map must be C x H x W")
    c, h, w = x.shape
    if fm.wf.shape[1] != c or fm.wg.shape[1] != c or fm.wh.shape != (c, c):
        raise ValueError("weight shapes inconsistent with channel count")
    if fm.wf.shape[0] != fm.wg.shape[0]:
        raise ValueError("key/query dimensions differ")
    flat = x.reshape(c, h * w)
    f = fm.wf @ flat
    g = fm.wg @ flat
    scores = f.T @ g                      # (N, N), scores[i, j]
    scores -= scores.max(axis=0, keepdims=True)  # softmax stability
    e = np.exp(scores)
    beta = e / e.sum(axis=0, keepdims=True)      # columns sum to 1
    out = flat + fm.gamma * (fm.wh @ flat) @ beta
    return out.reshape(c, h, w)


def attention_weights(fm: FeatureMap) -> np.ndarray:
    """The N x N attention matrix alone (columns sum to 1); for inspection."""
    x = np.asarray(fm.x, dtype=np.float64)
    c = x.shape[0]
    flat = x.reshape(c, -1)
    scores = (fm.wf @ flat).T @ (fm.wg @ flat)
    scores -= scores.max(axis=0, keepdims=True)
    e = np.exp(scores)
    return e / e.sum(axis=0, keepdims=True)


def generative_loss(pred: np.ndarray, target: np.ndarray, kind: str = "l1") -> float:
    """Reconstruction loss: mean L1 for images, mean BCE for binary masks.

    BCE requires pred strictly inside (0, 1) and a {0,1} target; clamping
    (conventional epsilon 1e-7) is the caller's responsibility.
    """
    pred = np.asarray(pred, dtype=np.float64)
    target = np.asarray(target, dtype=np.float64)
    if pred.shape != target.shape:
        raise ValueError("pred and target shapes differ")
    if kind == "l1":
        return float(np.mean(np.abs(pred - target)))
    if kind == "bce":
        if (pred <= 0).any() or (pred >= 1).any():
            raise ValueError("bce needs pred in (0, 1); clamp with eps=1e-7 first")
        if not np.isin(target, (0.0, 1.0)).all():
            raise ValueError("bce target must be binary")
        return float(-np.mean(target * np.log(pred) + (1 - target) * np.log1p(-pred)))
    raise ValueError(f"unknown loss kind {kind!r}")
