"""Command-line interface: render, augment, triplets, preview.

Every subcommand exits 0 on success and prints a single machine-parsable
`error: <category>: <message>` line to stderr (exit 1) on failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__, datapipe
from .augment import AugmentError
from .geometry import MeshError, load_mesh, normalize_pose_frame
from .raster import CameraIntrinsics, fit_intrinsics
from .viewsphere import ViewSphereConfig, build_pose_set

_MESH_EXTS = (".obj", ".ply")


def _parse_inplane(text):
    if text in (None, "", "none"):
        return None
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"expected MIN:MAX:STRIDE, got {text!r}")
    return (float(parts[0]), float(parts[1]), float(parts[2]))


def _load_symmetry_map(path):
    if path is None:
        return {}
    with open(path) as f:
        mapping = json.load(f)
    valid = {"regular", "plane_symmetric", "axis_symmetric"}
    for key, value in mapping.items():
        if value not in valid:
            raise ValueError(f"symmetry file: {key!r} has unknown class {value!r}")
    return mapping


def cmd_render(args) -> int:
    mesh_dir = Path(args.meshes)
    files = sorted(p for p in mesh_dir.iterdir() if p.suffix.lower() in _MESH_EXTS)
    if not files:
        raise MeshError(f"no .obj/.ply meshes in {mesh_dir}")
    symmetry_map = _load_symmetry_map(args.symmetry)
    meshes = [normalize_pose_frame(load_mesh(p, class_id=k + 1, scale=args.scale))
              for k, p in enumerate(files)]

    inplane = _parse_inplane(args.inplane)
    pose_sets = []
    for mesh in meshes:
        cfg = ViewSphereConfig(subdivisions=args.subdiv, radius=args.radius,
                               hemisphere=args.hemisphere, equator_rule=args.equator,
                               inplane=inplane,
                               symmetry=symmetry_map.get(mesh.name, "regular"),
                               orientation=args.orientation)
        pose_sets.append(build_pose_set(cfg))

    max_radius = max(m.bounding_radius for m in meshes)
    if args.focal:
        cam = CameraIntrinsics(fx=args.focal, fy=args.focal, cx=args.size / 2,
                               cy=args.size / 2, width=args.size, height=args.size)
    else:
        cam = fit_intrinsics(max_radius, args.radius, size=args.size, fill=args.fill)

    config = {
        "subdivisions": args.subdiv, "radius": args.radius,
        "hemisphere": args.hemisphere, "equator": args.equator,
        "inplane": list(inplane) if inplane else None,
        "orientation": args.orientation, "scale": args.scale,
        "smooth_normals": bool(args.smooth_normals),
        "meshes": [m.name for m in meshes],
        "symmetry": {m.name: symmetry_map.get(m.name, "regular") for m in meshes},
        "engine_version": __version__,
    }
    t0 = time.perf_counter()
    manifest = datapipe.render_clean_dataset(meshes, pose_sets, cam, args.out,
                                             config,
                                             smooth_normals=args.smooth_normals)
    n = sum(len(p) for p in pose_sets)
    print(f"rendered {n} views of {len(meshes)} mesh(es) in "
          f"{time.perf_counter() - t0:.1f}s -> {manifest}")
    return 0


def cmd_augment(args) -> int:
    patches = None if args.bg == "proc" else args.bg
    if patches is not None and not Path(patches).is_dir():
        raise AugmentError(f"background patch directory {patches} does not exist")
    t0 = time.perf_counter()
    manifest = datapipe.materialize_augmented(args.inp, args.out, args.count,
                                              args.seed, workers=args.workers,
                                              patches_dir=patches)
    dt = time.perf_counter() - t0
    print(f"augmented {args.count} samples in {dt:.1f}s "
          f"({args.count / dt:.0f}/s) -> {manifest}")
    return 0


def cmd_triplets(args) -> int:
    header, records = datapipe.read_manifest(datapipe.manifest_dir(args.inp))
    triplets = datapipe.generate_triplets(records, args.task, args.margin_n,
                                          args.count, args.seed)
    out = Path(args.out) if args.out else Path(args.inp) / "triplets.jsonl"
    datapipe.write_triplets(out, triplets, args.task, args.margin_n, args.seed)
    print(f"wrote {len(triplets)} {args.task} triplets -> {out}")
    return 0


def cmd_preview(args) -> int:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    header, records = datapipe.read_manifest(datapipe.manifest_dir(args.inp))
    try:
        rows, cols = (int(v) for v in args.grid.lower().split("x"))
    except ValueError:
        raise ValueError(f"grid must look like 8x8, got {args.grid!r}")
    n = min(rows * cols, len(records))
    if n == 0:
        raise datapipe.DatasetError("dataset has no samples to preview")

    base = Path(args.inp)
    fig, axes = plt.subplots(rows, cols, figsize=(cols * 1.1, rows * 1.1))
    axes = np.atleast_1d(axes).ravel()
    for ax in axes:
        ax.set_axis_off()
    for k in range(n):
        r = records[k]
        if "rgb" in r["files"]:
            img = datapipe._load_png(base / r["files"]["rgb"])
        else:
            img = datapipe._load_png(base / r["files"]["normal"])
        axes[k].imshow(img)
        axes[k].set_title(f"c{r['class_id']}", fontsize=5, pad=1)
    fig.subplots_adjust(wspace=0.04, hspace=0.18, left=0.01, right=0.99,
                        top=0.96, bottom=0.01)
    fig.savefig(args.out, dpi=160)
    plt.close(fig)
    print(f"wrote {n}-tile contact sheet -> {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="syntheon",
        description="CAD-to-synthetic-data engine: geometric modality "
                    "rendering and randomized online augmentation.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("render", help="render clean modality stacks over a view sphere")
    p.add_argument("--meshes", required=True, help="directory of .obj/.ply meshes")
    p.add_argument("--out", required=True, help="output dataset directory")
    p.add_argument("--subdiv", type=int, default=3)
    p.add_argument("--radius", type=float, default=600.0, help="view sphere radius, mm")
    p.add_argument("--hemisphere", choices=["full", "upper"], default="full")
    p.add_argument("--equator", choices=["include", "exclude"], default="include")
    p.add_argument("--inplane", default=None, help="MIN:MAX:STRIDE degrees, e.g. -45:45:15")
    p.add_argument("--symmetry", default=None,
                   help="JSON file mapping mesh stem -> regular|plane_symmetric|axis_symmetric")
    p.add_argument("--orientation", choices=["golden", "polar"], default="golden")
    p.add_argument("--size", type=int, default=64, help="image side, pixels")
    p.add_argument("--fill", type=float, default=0.85,
                   help="fraction of the half-frame the largest object spans")
    p.add_argument("--focal", type=float, default=None, help="override fitted focal, px")
    p.add_argument("--scale", type=float, default=1.0,
                   help="unit conversion multiplier applied to mesh coordinates")
    p.add_argument("--smooth-normals", action="store_true",
                   help="interpolate vertex normals (curved meshes)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("augment", help="materialize augmented color samples")
    p.add_argument("--in", dest="inp", required=True, help="clean dataset directory")
    p.add_argument("--out", required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bg", default="proc",
                   help="'proc' for procedural noise or a directory of patch images")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_augment)

    p = sub.add_parser("triplets", help="sample triplet records from a clean dataset")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--task", choices=["ic", "icpe"], default="icpe")
    p.add_argument("--margin-n", type=float, default=3.2,
                   help="fixed cross-class margin (must exceed pi)")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_triplets)

    p = sub.add_parser("preview", help="write a contact-sheet PNG of a dataset")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--grid", default="8x8")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_preview)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MeshError, AugmentError, datapipe.DatasetError, ValueError,
            OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
