"""Batched modality streams backed by the syntheon engine."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

import syntheon
from syntheon.augment import AugmentedSample, NoiseVector
from syntheon.datapipe import load_clean_dataset, stream_augmented
from syntheon.viewsphere import Pose

# engine releases the bridge is built against (major.minor)
_COMPATIBLE_ENGINE = "0.1"


class BridgeVersionError(RuntimeError):
    pass


def _check_engine_version() -> None:
    engine = ".".join(syntheon.__version__.split(".")[:2])
    if engine != _COMPATIBLE_ENGINE:
        raise BridgeVersionError(
            f"engine/bridge version mismatch: syntheon {syntheon.__version__} "
            f"vs trainbridge built for {_COMPATIBLE_ENGINE}.x")


@dataclass
class BridgeBatch:
    """One training batch; array contents byte-equal the engine's output.

    pose rows are (qw, qx, qy, qz, px, py, pz, inplane_deg); provenance
    carries the full per-sample record (class id, Pose, noise vector,
    sample seed) for replay.
    """

    rgb: np.ndarray        # (B, h, w, 3) float32 in [-1, 1]
    lightness: np.ndarray  # (B, h, w) float32 in [0, 1]
    normal: np.ndarray     # (B, h, w, 3) float32 clean ground truth
    depth: np.ndarray      # (B, h, w) float32 mm
    semantic: np.ndarray   # (B, h, w) uint8
    pose: np.ndarray       # (B, 8) float64
    class_ids: np.ndarray  # (B,) int32
    seeds: np.ndarray      # (B,) uint64
    provenance: list[tuple[int, Pose, NoiseVector, int]]

    def __len__(self) -> int:
        return len(self.class_ids)


def _pose_row(pose: Pose) -> np.ndarray:
    q = pose.rotation
    return np.array([q.w, q.x, q.y, q.z, pose.position[0], pose.position[1],
                     pose.position[2], pose.inplane_deg])


def _collate(samples: list[AugmentedSample], stacks, n_clean: int,
             start: int) -> BridgeBatch:
    sources = [stacks[(start + k) % n_clean] for k in range(len(samples))]
    return BridgeBatch(
        rgb=np.stack([s.rgb for s in samples]),
        lightness=np.stack([s.lightness for s in samples]),
        normal=np.stack([st.normal for st in sources]),
        depth=np.stack([st.depth for st in sources]),
        semantic=np.stack([st.semantic for st in sources]),
        pose=np.stack([_pose_row(s.pose) for s in samples]),
        class_ids=np.array([s.class_id for s in samples], dtype=np.int32),
        seeds=np.array([s.seed for s in samples], dtype=np.uint64),
        provenance=[(s.class_id, s.pose, s.noise_vector, s.seed)
                    for s in samples],
    )


def open_stream(dataset_dir, seed: int, batch_size: int,
                start_batch: int = 0, workers: int = 1,
                patches_dir=None) -> Iterator[BridgeBatch]:
    """Infinite deterministic iterator of BridgeBatch over a clean dataset.

    Batch b holds engine samples [b*batch_size, (b+1)*batch_size); two
    iterators with the same arguments yield identical streams, and any
    batch is reproducible in isolation via `start_batch` (or batch_at).
    """
    _check_engine_version()
    if batch_size < 1:
        raise ValueError("batch_size must be >= 1")
    _, stacks = load_clean_dataset(dataset_dir)
    n_clean = len(stacks)
    engine = stream_augmented(dataset_dir, seed, workers=workers,
                              patches_dir=patches_dir,
                              start_index=start_batch * batch_size)
    index = start_batch * batch_size
    while True:
        samples = list(itertools.islice(engine, batch_size))
        yield _collate(samples, stacks, n_clean, index)
        index += batch_size


def batch_at(dataset_dir, seed: int, batch_size: int, index: int,
             patches_dir=None) -> BridgeBatch:
    """Batch `index` of the stream, computed in isolation."""
    stream = open_stream(dataset_dir, seed, batch_size, start_batch=index,
                         patches_dir=patches_dir)
    try:
        return next(stream)
    finally:
        stream.close()
