"""Dataset persistence, manifests, triplet generation and ordered streaming.

Datasets live in a directory with a `manifest.jsonl` (one canonical JSON
record per line, keys sorted, first line a header) and an `images/` tree.
Encodings: normals as 8-bit RGB round((n+1)/2*255), depth as 16-bit
grayscale PNG in integer millimeters, semantic as 8-bit indexed PNG,
augmented color as 8-bit RGB round((v+1)/2*255), lightness as 8-bit gray.
Manifest replay regenerates byte-identical files for any worker count:
sample i derives its seed as hash(global seed, i), and augmentation is a
pure function of (stack, noise vector, patch bytes).
"""

from __future__ import annotations

import hashlib
import itertools
import json
import multiprocessing
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional, Sequence

import numpy as np
from PIL import Image

from .augment import (AugmentedSample, NoiseVector, PatchCorpus, augment,
                      sample_noise_vector)
from .geometry import Quaternion
from .kernels import icpe_margin
from .noise import hash64
from .raster import CameraIntrinsics, ModalityStack
from .viewsphere import Pose

FORMAT_VERSION = 1


class DatasetError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Pixel encodings
# ---------------------------------------------------------------------------

def _round_half_up(x: np.ndarray) -> np.ndarray:
    return np.floor(x + 0.5)


def encode_normal(normal: np.ndarray) -> np.ndarray:
    """[-1,1] float normals -> uint8 RGB; (0,0,1) maps to (128,128,255)."""
    return _round_half_up((normal + 1.0) / 2.0 * 255.0).clip(0, 255).astype(np.uint8)


def decode_normal(rgb: np.ndarray) -> np.ndarray:
    return (rgb.astype(np.float32) / 255.0 * 2.0 - 1.0)


def encode_depth(depth: np.ndarray) -> np.ndarray:
    """mm floats -> uint16 integer millimeters."""
    return _round_half_up(depth).clip(0, 65535).astype(np.uint16)


def decode_depth(raw: np.ndarray) -> np.ndarray:
    return raw.astype(np.float32)


def encode_unit(img: np.ndarray) -> np.ndarray:
    """[-1,1] float image -> uint8."""
    return _round_half_up((img + 1.0) / 2.0 * 255.0).clip(0, 255).astype(np.uint8)


def encode_01(img: np.ndarray) -> np.ndarray:
    """[0,1] float image -> uint8."""
    return _round_half_up(img * 255.0).clip(0, 255).astype(np.uint8)


def _save_png(arr: np.ndarray, path: Path) -> None:
    # uint16 arrays map to Pillow's 16-bit grayscale mode I;16
    Image.fromarray(arr).save(path, format="PNG")


def _load_png(path: Path) -> np.ndarray:
    with Image.open(path) as img:
        arr = np.asarray(img)
    if arr.dtype == np.int32:  # some Pillow versions decode I;16 into int32
        arr = arr.astype(np.uint16)
    return arr


def export_stack(stack: ModalityStack, out_dir, stem: str) -> dict:
    """Write the three modality PNGs; returns paths relative to out_dir."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = {
        "normal": f"{stem}_normal.png",
        "depth": f"{stem}_depth.png",
        "semantic": f"{stem}_semantic.png",
    }
    _save_png(encode_normal(stack.normal), out_dir / paths["normal"])
    _save_png(encode_depth(stack.depth), out_dir / paths["depth"])
    _save_png(stack.semantic.astype(np.uint8), out_dir / paths["semantic"])
    return paths


def import_stack(paths: dict, base_dir, pose: Optional[Pose] = None,
                 class_id: Optional[int] = None) -> ModalityStack:
    """Inverse of export_stack: lossless for semantic and integer-mm depth,
    within 1/255 per normal component."""
    base_dir = Path(base_dir)
    normal = decode_normal(_load_png(base_dir / paths["normal"]))
    depth = decode_depth(_load_png(base_dir / paths["depth"]))
    semantic = _load_png(base_dir / paths["semantic"]).astype(np.uint8)
    if class_id is None:
        fg = semantic != 0
        class_id = int(semantic[fg].max()) if fg.any() else 1
    # quantized normals drift off unit norm by ~1/255; keep background zero
    normal[semantic == 0] = 0.0
    return ModalityStack(normal=normal, depth=depth, semantic=semantic,
                         pose=pose, class_id=class_id,
                         empty_foreground=not bool((semantic != 0).any()))


# ---------------------------------------------------------------------------
# Manifest records
# ---------------------------------------------------------------------------

def _dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def pose_to_dict(pose: Pose) -> dict:
    q = pose.rotation
    return {"qw": q.w, "qx": q.x, "qy": q.y, "qz": q.z,
            "px": float(pose.position[0]), "py": float(pose.position[1]),
            "pz": float(pose.position[2]),
            "inplane_deg": pose.inplane_deg,
            "vertex_index": pose.vertex_index}


def pose_from_dict(d: dict) -> Pose:
    return Pose(rotation=Quaternion(d["qw"], d["qx"], d["qy"], d["qz"]),
                position=np.array([d["px"], d["py"], d["pz"]]),
                inplane_deg=d["inplane_deg"],
                vertex_index=d["vertex_index"])


def write_manifest(path, header: dict, records: Sequence[dict]) -> None:
    path = Path(path)
    with open(path, "w") as f:
        f.write(_dumps({"record": "header", **header}) + "\n")
        for r in records:
            f.write(_dumps({"record": "sample", **r}) + "\n")


def read_manifest(path) -> tuple[dict, list[dict]]:
    path = Path(path)
    if not path.is_file():
        raise DatasetError(f"no manifest at {path}")
    with open(path) as f:
        lines = [json.loads(line) for line in f if line.strip()]
    if not lines or lines[0].get("record") != "header":
        raise DatasetError(f"manifest {path} lacks a header record")
    return lines[0], lines[1:]


def config_hash(config: dict) -> str:
    return hashlib.sha256(_dumps(config).encode()).hexdigest()[:16]


def file_sha256(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def manifest_dir(dataset_dir) -> Path:
    return Path(dataset_dir) / "manifest.jsonl"


def load_clean_dataset(dataset_dir) -> tuple[dict, list[ModalityStack]]:
    """Read a rendered dataset back into memory, poses included."""
    dataset_dir = Path(dataset_dir)
    header, records = read_manifest(manifest_dir(dataset_dir))
    if header.get("kind") != "clean":
        raise DatasetError(f"expected a clean dataset manifest, got {header.get('kind')!r}")
    stacks = []
    for r in records:
        stacks.append(import_stack(r["files"], dataset_dir,
                                   pose=pose_from_dict(r["pose"]),
                                   class_id=r["class_id"]))
    return header, stacks


# ---------------------------------------------------------------------------
# Triplet generation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TripletRecord:
    anchor: int
    positive: int
    negative: int
    margin: float


def generate_triplets(records: Sequence[dict], task: str, n: float,
                      count: int, seed: int, candidates: int = 8) -> list[TripletRecord]:
    """Deterministic triplet sampling over a clean manifest.

    Anchors are drawn uniformly among samples whose class has at least two
    members. The positive is the nearest-pose candidate of `candidates`
    same-class draws; the negative is a different-class sample for the ic
    task, and an even coin between a distant-pose same-class sample and a
    different-class sample for icpe. Margins follow the pose-aware rule:
    a fixed n for cross-class pairs, the quaternion angular distance of the
    anchor/positive poses for same-class icpe pairs.
    """
    if task not in ("ic", "icpe"):
        raise DatasetError(f"unknown triplet task {task!r}")
    ids_by_class: dict[int, list[int]] = {}
    for i, r in enumerate(records):
        ids_by_class.setdefault(r["class_id"], []).append(i)
    usable = [c for c, ids in ids_by_class.items() if len(ids) >= 2]
    if not usable:
        raise DatasetError("triplet generation needs a class with >= 2 samples")
    single_class = len(ids_by_class) < 2
    if single_class:
        warnings.warn("manifest has a single class; negatives fall back to "
                      "distant same-class poses")
    quats = [Quaternion(r["pose"]["qw"], r["pose"]["qx"], r["pose"]["qy"],
                        r["pose"]["qz"]) for r in records]
    classes = [r["class_id"] for r in records]
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        anchor = int(rng.choice(ids_by_class[usable[rng.integers(len(usable))]]))
        same = [i for i in ids_by_class[classes[anchor]] if i != anchor]
        cand = rng.choice(len(same), size=min(candidates, len(same)), replace=False)
        cand_ids = [same[int(k)] for k in cand]
        dists = [icpe_margin(1, 1, quats[anchor], quats[i], n=4.0) for i in cand_ids]
        positive = cand_ids[int(np.argmin(dists))]

        want_cross = not single_class and (task == "ic" or rng.integers(2) == 0)
        if want_cross:
            others = [c for c in ids_by_class if c != classes[anchor]]
            pool = ids_by_class[others[int(rng.integers(len(others)))]]
            negative = int(pool[int(rng.integers(len(pool)))])
        else:
            far_cand = rng.choice(len(same), size=min(candidates, len(same)),
                                  replace=False)
            far_ids = [same[int(k)] for k in far_cand]
            far = [icpe_margin(1, 1, quats[anchor], quats[i], n=4.0) for i in far_ids]
            negative = far_ids[int(np.argmax(far))]
        if negative == anchor:
            continue
        if task == "ic":
            margin = float(n)
        else:
            margin = icpe_margin(classes[anchor], classes[positive],
                                 quats[anchor], quats[positive], n=n)
        out.append(TripletRecord(anchor, positive, negative, margin))
    return out


def write_triplets(path, triplets: Sequence[TripletRecord], task: str,
                   n: float, seed: int) -> None:
    with open(path, "w") as f:
        f.write(_dumps({"record": "header", "kind": "triplets", "task": task,
                        "margin_n": n, "seed": seed,
                        "format_version": FORMAT_VERSION}) + "\n")
        for t in triplets:
            f.write(_dumps({"record": "triplet", "anchor": t.anchor,
                            "positive": t.positive, "negative": t.negative,
                            "margin": t.margin}) + "\n")


# ---------------------------------------------------------------------------
# Ordered augmentation streaming
# ---------------------------------------------------------------------------

def _sample_at(stacks, focal, global_seed, patches, index: int) -> AugmentedSample:
    stack = stacks[index % len(stacks)]
    seed_i = hash64(global_seed, index)
    z = sample_noise_vector(seed_i, image_size=stack.semantic.shape[::-1],
                            allow_patches=patches is not None)
    return augment(stack, z, patches=patches, focal=focal, seed=seed_i)


_WORKER: dict = {}


def _stream_init(dataset_dir, global_seed, patches_dir):
    header, stacks = load_clean_dataset(dataset_dir)
    _WORKER["args"] = (stacks, tuple(header["intrinsics"]["focal"]), global_seed,
                       PatchCorpus(patches_dir) if patches_dir else None)


def _stream_make(index: int) -> AugmentedSample:
    return _sample_at(*_WORKER["args"], index)


def stream_augmented(dataset_dir, global_seed: int, workers: int = 1,
                     patches_dir=None, start_index: int = 0) -> Iterator[AugmentedSample]:
    """Infinite ordered stream of augmented samples over a clean dataset.

    Sample i is a pure function of (manifest, global seed, i): it wraps the
    clean set modulo its length and draws a fresh noise vector from
    hash(global seed, i), so any worker count yields the identical
    sequence, and a stream opened at `start_index` continues it exactly.
    Workers fan out over sample indices in bounded blocks; output order is
    by index.
    """
    if workers <= 1:
        header, stacks = load_clean_dataset(dataset_dir)
        focal = tuple(header["intrinsics"]["focal"])
        patches = PatchCorpus(patches_dir) if patches_dir else None
        for i in itertools.count(start_index):
            yield _sample_at(stacks, focal, global_seed, patches, i)
        return

    # chunked ordered imap over a semaphore-bounded index feed: the pool's
    # task feeder blocks once `window` indices are in flight, so the
    # infinite stream never outruns its consumer. The stop flag lets the
    # feeder thread exit when the consumer abandons the stream, otherwise
    # pool teardown would join a thread stuck on the gate.
    import threading
    chunk = 8
    window = workers * chunk * 4
    gate = threading.Semaphore(window)
    stopping = threading.Event()

    def indices():
        for i in itertools.count(start_index):
            while not gate.acquire(timeout=0.2):
                if stopping.is_set():
                    return
            yield i

    pool = multiprocessing.Pool(workers, initializer=_stream_init,
                                initargs=(dataset_dir, global_seed, patches_dir))
    try:
        for sample in pool.imap(_stream_make, indices(), chunksize=chunk):
            gate.release()
            yield sample
    finally:
        stopping.set()
        pool.terminate()
        pool.join()


def materialize_augmented(dataset_dir, out_dir, count: int, global_seed: int,
                          workers: int = 1, patches_dir=None) -> Path:
    """Render `count` augmented samples to disk with a replayable manifest."""
    dataset_dir = Path(dataset_dir)
    out_dir = Path(out_dir)
    images = out_dir / "images"
    images.mkdir(parents=True, exist_ok=True)
    header, source_records = read_manifest(manifest_dir(dataset_dir))
    n_clean = max(1, len(source_records))

    records = []
    stream = stream_augmented(dataset_dir, global_seed, workers=workers,
                              patches_dir=patches_dir)
    for i, sample in enumerate(itertools.islice(stream, count)):
        stem = f"{i:06d}"
        paths = {"rgb": f"images/{stem}_rgb.png",
                 "lightness": f"images/{stem}_lightness.png"}
        _save_png(encode_unit(sample.rgb), out_dir / paths["rgb"])
        _save_png(encode_01(sample.lightness), out_dir / paths["lightness"])
        records.append({
            "id": i,
            "source_id": i % n_clean,
            "class_id": sample.class_id,
            "pose": pose_to_dict(sample.pose),
            "seed": sample.seed,
            "noise": sample.noise_vector.to_dict(),
            "files": paths,
        })
    out_header = {
        "kind": "augmented",
        "format_version": FORMAT_VERSION,
        "global_seed": global_seed,
        "distribution_version": records[0]["noise"]["version"] if records else 1,
        "source_config_hash": header.get("config_hash", ""),
        "intrinsics": header["intrinsics"],
        "background": str(patches_dir) if patches_dir else "procedural",
        "count": count,
    }
    out_header["config_hash"] = config_hash(out_header)
    write_manifest(manifest_dir(out_dir), out_header, records)
    return manifest_dir(out_dir)


# ---------------------------------------------------------------------------
# Clean dataset rendering to disk
# ---------------------------------------------------------------------------

def render_clean_dataset(meshes, pose_sets, cam: CameraIntrinsics, out_dir,
                         config: dict, smooth_normals: bool = False) -> Path:
    """Render every (mesh, pose) pair and persist stacks plus manifest.

    pose_sets is one pose list per mesh (symmetry classes differ per
    object, so pose sets may too).
    """
    from .raster import render_view
    out_dir = Path(out_dir)
    images = out_dir / "images"
    images.mkdir(parents=True, exist_ok=True)
    records = []
    i = 0
    for mesh, poses in zip(meshes, pose_sets):
        for pose in poses:
            stack = render_view(mesh, pose, cam, smooth_normals=smooth_normals)
            stem = f"{i:06d}"
            paths = export_stack(stack, images, stem)
            records.append({
                "id": i,
                "class_id": mesh.class_id,
                "mesh": mesh.name,
                "pose": pose_to_dict(pose),
                "empty_foreground": stack.empty_foreground,
                "files": {k: f"images/{v}" for k, v in paths.items()},
            })
            i += 1
    header = {
        "kind": "clean",
        "format_version": FORMAT_VERSION,
        "intrinsics": {"focal": [cam.fy, cam.fx], "principal": [cam.cx, cam.cy],
                       "size": [cam.width, cam.height]},
        "config": config,
        "count": i,
    }
    header["config_hash"] = config_hash({"config": config,
                                         "intrinsics": header["intrinsics"]})
    write_manifest(manifest_dir(out_dir), header, records)
    return manifest_dir(out_dir)
