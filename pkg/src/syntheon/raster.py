"""Software rasterizer producing clean per-view modality stacks.

Each view yields co-registered camera-space normal, depth and semantic
maps. Conventions, shared with the shading stage:

- camera axes: x right, y down, z forward (view direction);
- emitted normal channels: (down, right, toward-camera), so a surface
  facing the camera encodes as (0, 0, 1) and pixel (j, i) pairs with the
  view-vector grid built from the same indices;
- depth is the camera-space z distance in mm (not ray length);
- semantic stores the mesh class id, 0 for background.

Pixels sample rays through integer coordinates (i, j) with the principal
point at (w/2, h/2). Back-face culling is off (thin CAD shells are
common); the z-buffer resolves visibility. Faces with a vertex behind the
near plane are rejected whole, which is exact for view-sphere renders
where the object never straddles the camera.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .geometry import Mesh
from .viewsphere import Pose

_NEAR = 1e-6  # mm


@dataclass(frozen=True)
class CameraIntrinsics:
    fx: float
    fy: float
    cx: float
    cy: float
    width: int
    height: int

    def __post_init__(self):
        if self.fx <= 0 or self.fy <= 0:
            raise ValueError("focal lengths must be positive")
        if self.width <= 0 or self.height <= 0:
            raise ValueError("image size must be positive")

    @property
    def focal(self) -> tuple[float, float]:
        return (self.fx, self.fy)


def fit_intrinsics(object_radius: float, view_radius: float, size: int = 64,
                   fill: float = 0.85) -> CameraIntrinsics:
    """Square intrinsics such that a sphere of object_radius at view_radius
    covers `fill` of the half-frame."""
    if not 0 < object_radius < view_radius:
        raise ValueError("need 0 < object_radius < view_radius")
    half_angle = math.asin(object_radius / view_radius)
    f = fill * (size / 2.0) / math.tan(half_angle)
    return CameraIntrinsics(fx=f, fy=f, cx=size / 2.0, cy=size / 2.0,
                            width=size, height=size)


@dataclass
class ModalityStack:
    """One clean sample: normal + depth + semantic maps for a single view."""

    normal: np.ndarray     # (h, w, 3) float32, unit on foreground, 0 on background
    depth: np.ndarray      # (h, w) float32 mm, 0 on background
    semantic: np.ndarray   # (h, w) uint8 class ids, 0 on background
    pose: Optional[Pose]
    class_id: int
    empty_foreground: bool = field(default=False)

    @property
    def foreground(self) -> np.ndarray:
        return self.semantic != 0

    def validate(self, tol: float = 1e-3) -> None:
        """Check cross-channel invariants; raises AssertionError on violation."""
        fg = self.foreground
        assert np.isfinite(self.normal).all() and np.isfinite(self.depth).all()
        assert np.array_equal(fg, self.depth > 0), "depth/semantic masks disagree"
        norms = np.linalg.norm(self.normal, axis=2)
        assert np.array_equal(fg, norms > 0.5), "normal/semantic masks disagree"
        if fg.any():
            assert np.abs(norms[fg] - 1.0).max() < tol, "non-unit foreground normal"
        assert (self.normal[~fg] == 0).all()


def _vertex_normals(mesh: Mesh) -> np.ndarray:
    """Area-weighted per-vertex normals (for the smooth-normal switch)."""
    a = mesh.vertices[mesh.faces[:, 0]]
    b = mesh.vertices[mesh.faces[:, 1]]
    c = mesh.vertices[mesh.faces[:, 2]]
    weighted = np.cross(b - a, c - a)  # length = 2 * area
    vn = np.zeros_like(mesh.vertices)
    for k in range(3):
        np.add.at(vn, mesh.faces[:, k], weighted)
    length = np.linalg.norm(vn, axis=1)
    length[length < 1e-12] = 1.0
    return vn / length[:, None]


def render_view(mesh: Mesh, pose: Pose, cam: CameraIntrinsics,
                smooth_normals: bool = False) -> ModalityStack:
    """Rasterize one view of the mesh into a ModalityStack.

    Flat per-face normals by default (CAD models are polygonal); the
    smooth switch interpolates area-weighted vertex normals instead for
    curved meshes. A view with no covered pixels is returned with the
    empty_foreground flag set rather than raising: occluded or edge views
    are legitimate.
    """
    h, w = cam.height, cam.width
    rot = pose.rotation.to_matrix()
    # world -> camera: X_c = R^T (X_w - position)
    verts_cam = (mesh.vertices - pose.position) @ rot
    normals_cam = mesh.face_normals @ rot
    # emitted normal frame: (down, right, toward camera)
    face_attr = np.stack([normals_cam[:, 1], normals_cam[:, 0], -normals_cam[:, 2]],
                         axis=1).astype(np.float64)
    if smooth_normals:
        vn_cam = _vertex_normals(mesh) @ rot
        vert_attr = np.stack([vn_cam[:, 1], vn_cam[:, 0], -vn_cam[:, 2]], axis=1)

    z = verts_cam[:, 2]
    valid = z > _NEAR
    sx = np.where(valid, cam.fx * verts_cam[:, 0] / np.where(valid, z, 1.0) + cam.cx, 0.0)
    sy = np.where(valid, cam.fy * verts_cam[:, 1] / np.where(valid, z, 1.0) + cam.cy, 0.0)

    depth = np.zeros((h, w), dtype=np.float64)
    zbuf = np.full((h, w), np.inf)
    normal = np.zeros((h, w, 3), dtype=np.float64)
    semantic = np.zeros((h, w), dtype=np.uint8)

    for fi, (i0, i1, i2) in enumerate(mesh.faces):
        if not (valid[i0] and valid[i1] and valid[i2]):
            continue
        x0, x1, x2 = sx[i0], sx[i1], sx[i2]
        y0, y1, y2 = sy[i0], sy[i1], sy[i2]
        area = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0)
        if area == 0.0:
            continue
        xmin = max(int(math.ceil(min(x0, x1, x2))), 0)
        xmax = min(int(math.floor(max(x0, x1, x2))), w - 1)
        ymin = max(int(math.ceil(min(y0, y1, y2))), 0)
        ymax = min(int(math.floor(max(y0, y1, y2))), h - 1)
        if xmin > xmax or ymin > ymax:
            continue
        px, py = np.meshgrid(np.arange(xmin, xmax + 1), np.arange(ymin, ymax + 1))
        # screen-space barycentrics via edge functions
        l0 = ((x1 - px) * (y2 - py) - (x2 - px) * (y1 - py)) / area
        l1 = ((x2 - px) * (y0 - py) - (x0 - px) * (y2 - py)) / area
        l2 = 1.0 - l0 - l1
        inside = (l0 >= 0) & (l1 >= 0) & (l2 >= 0)
        if not inside.any():
            continue
        inv_z = l0 / z[i0] + l1 / z[i1] + l2 / z[i2]
        pz = 1.0 / inv_z
        rows, cols = py[inside], px[inside]
        pz_in = pz[inside]
        closer = pz_in < zbuf[rows, cols]
        if not closer.any():
            continue
        rows, cols, pz_in = rows[closer], cols[closer], pz_in[closer]
        zbuf[rows, cols] = pz_in
        depth[rows, cols] = pz_in
        semantic[rows, cols] = mesh.class_id
        if smooth_normals:
            a0, a1, a2 = vert_attr[i0], vert_attr[i1], vert_attr[i2]
            lam = np.stack([l0[inside][closer] / z[i0],
                            l1[inside][closer] / z[i1],
                            l2[inside][closer] / z[i2]], axis=1) * pz_in[:, None]
            n = lam @ np.stack([a0, a1, a2])
            n /= np.linalg.norm(n, axis=1, keepdims=True)
            normal[rows, cols] = n
        else:
            normal[rows, cols] = face_attr[fi]

    fg = semantic != 0
    return ModalityStack(
        normal=normal.astype(np.float32),
        depth=depth.astype(np.float32),
        semantic=semantic,
        pose=pose,
        class_id=mesh.class_id,
        empty_foreground=not bool(fg.any()),
    )


def render_dataset(meshes: Sequence[Mesh], poses: Sequence[Pose],
                   cam: CameraIntrinsics, smooth_normals: bool = False,
                   workers: int = 1) -> list[ModalityStack]:
    """One stack per (mesh, pose), mesh-major then pose order.

    With workers > 1 views are rendered in a process pool; output order is
    by index regardless of completion order.
    """
    if not meshes or not poses:
        raise ValueError("need at least one mesh and one pose")
    jobs = [(mesh, pose) for mesh in meshes for pose in poses]
    if workers <= 1:
        return [render_view(m, p, cam, smooth_normals) for m, p in jobs]
    import multiprocessing as mp
    with mp.Pool(workers) as pool:
        return pool.starmap(render_view,
                            [(m, p, cam, smooth_normals) for m, p in jobs],
                            chunksize=max(1, len(jobs) // (workers * 4)))
