"""Camera pose sets on subdivided icosahedra.

Pipeline: icosphere vertices -> hemisphere filter -> symmetry reduction ->
in-plane expansion -> look-at poses on a sphere of the configured radius.
Vertex count follows 10*4^s + 2. Ordering is deterministic (vertex index
major, in-plane angle minor) so dataset manifests reproduce byte-for-byte.

Two base orientations are supported. "golden" is the classic golden-
rectangle icosahedron: four vertices lie in the z=0 plane, and at three
subdivisions the closed upper hemisphere holds exactly 337 vertices, the
configuration that reproduces the published per-object view counts
(337*7=2359, 177*7=1239, 17*7=119). "polar" puts two vertices on the +-z
axis instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import Quaternion

_PHI = (1.0 + math.sqrt(5.0)) / 2.0

_GOLDEN_VERTS = [
    (-1, _PHI, 0), (1, _PHI, 0), (-1, -_PHI, 0), (1, -_PHI, 0),
    (0, -1, _PHI), (0, 1, _PHI), (0, -1, -_PHI), (0, 1, -_PHI),
    (_PHI, 0, -1), (_PHI, 0, 1), (-_PHI, 0, -1), (-_PHI, 0, 1),
]
_GOLDEN_FACES = [
    (0, 11, 5), (0, 5, 1), (0, 1, 7), (0, 7, 10), (0, 10, 11),
    (1, 5, 9), (5, 11, 4), (11, 10, 2), (10, 7, 6), (7, 1, 8),
    (3, 9, 4), (3, 4, 2), (3, 2, 6), (3, 6, 8), (3, 8, 9),
    (4, 9, 5), (2, 4, 11), (6, 2, 10), (8, 6, 7), (9, 8, 1),
]

_EQ_TOL = 1e-9  # |z| below this counts as lying on the equator


@dataclass(frozen=True)
class ViewSphereConfig:
    subdivisions: int = 3
    radius: float = 600.0                 # mm
    hemisphere: str = "full"              # full | upper
    equator_rule: str = "include"         # include | exclude
    inplane: Optional[tuple[float, float, float]] = None  # (min deg, max deg, stride deg)
    symmetry: str = "regular"             # regular | plane_symmetric | axis_symmetric
    orientation: str = "golden"           # golden | polar

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        if self.inplane is not None and self.inplane[2] <= 0:
            raise ValueError("in-plane stride must be positive")
        if self.hemisphere not in ("full", "upper"):
            raise ValueError(f"unknown hemisphere {self.hemisphere!r}")
        if self.equator_rule not in ("include", "exclude"):
            raise ValueError(f"unknown equator_rule {self.equator_rule!r}")
        if self.symmetry not in ("regular", "plane_symmetric", "axis_symmetric"):
            raise ValueError(f"unknown symmetry {self.symmetry!r}")
        if self.orientation not in ("golden", "polar"):
            raise ValueError(f"unknown orientation {self.orientation!r}")


@dataclass(frozen=True)
class Pose:
    """One camera viewpoint: position on the sphere plus look-at rotation.

    rotation maps the camera forward axis (0,0,1) onto -position/|position|,
    i.e. the camera looks at the object center. inplane_deg is the roll
    about the view axis already folded into rotation.
    """

    rotation: Quaternion
    position: np.ndarray      # (3,) mm
    inplane_deg: float
    vertex_index: int

    @property
    def radius(self) -> float:
        return float(np.linalg.norm(self.position))


def _base_icosahedron(orientation: str) -> tuple[np.ndarray, list]:
    if orientation == "golden":
        verts = np.array(_GOLDEN_VERTS, dtype=np.float64)
        verts /= np.linalg.norm(verts, axis=1, keepdims=True)
        return verts, list(_GOLDEN_FACES)
    # polar: two vertices on +-z, rings at z = +-1/sqrt(5)
    zr = 1.0 / math.sqrt(5.0)
    rr = 2.0 / math.sqrt(5.0)
    verts = [(0.0, 0.0, 1.0)]
    for i in range(5):
        a = 2.0 * math.pi * i / 5.0
        verts.append((rr * math.cos(a), rr * math.sin(a), zr))
    for i in range(5):
        a = 2.0 * math.pi * (i + 0.5) / 5.0
        verts.append((rr * math.cos(a), rr * math.sin(a), -zr))
    verts.append((0.0, 0.0, -1.0))
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces.append((0, 1 + i, 1 + j))
        faces.append((1 + i, 6 + i, 1 + j))
        faces.append((1 + j, 6 + i, 6 + j))
        faces.append((6 + i, 11, 6 + j))
    return np.array(verts, dtype=np.float64), faces


def icosphere_vertices(subdivisions: int, orientation: str = "golden") -> np.ndarray:
    """Unit vertices of the subdivided icosahedron; count is 10*4^s + 2.

    Edge midpoints are re-projected to the sphere each level; shared edges
    are deduplicated through a midpoint cache, and ordering (base vertices
    first, then midpoints in face-processing order) is deterministic.
    """
    if not 0 <= subdivisions <= 6:
        raise ValueError(f"subdivisions must be in [0, 6], got {subdivisions}")
    base, faces = _base_icosahedron(orientation)
    verts = [tuple(v) for v in base]
    for _ in range(subdivisions):
        cache: dict = {}
        new_faces = []

        def midpoint(i: int, j: int) -> int:
            key = (i, j) if i < j else (j, i)
            if key not in cache:
                m = (np.asarray(verts[i]) + np.asarray(verts[j])) / 2.0
                m /= np.linalg.norm(m)
                verts.append(tuple(m))
                cache[key] = len(verts) - 1
            return cache[key]

        for a, b, c in faces:
            ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
            new_faces += [(a, ab, ca), (ab, b, bc), (ca, bc, c), (ab, bc, ca)]
        faces = new_faces
    return np.array(verts, dtype=np.float64)


def filter_hemisphere(vertices: np.ndarray, hemisphere: str,
                      equator_rule: str = "include") -> np.ndarray:
    """Keep the full set, or the upper half (z > 0 plus, optionally, the z=0 ring)."""
    vertices = np.asarray(vertices, dtype=np.float64)
    if hemisphere == "full":
        return vertices
    z = vertices[:, 2]
    keep = z >= _EQ_TOL
    if equator_rule == "include":
        keep |= np.abs(z) < _EQ_TOL
    return vertices[keep]


def _azimuth_deg(xy: np.ndarray) -> np.ndarray:
    az = np.degrees(np.arctan2(xy[:, 1], xy[:, 0])) % 360.0
    az[np.abs(az - 360.0) < 1e-7] = 0.0
    return az


def apply_symmetry(poses: list[Pose], symmetry: str) -> list[Pose]:
    """Reduce a pose set to one representative per symmetry-equivalent view.

    plane_symmetric keeps azimuths in the closed half-turn [0, 180] degrees:
    views mirrored across the x-z plane are equivalent, and views lying on
    the boundary meridians are their own mirror image, so the closed
    interval counts each equivalence class exactly once. axis_symmetric
    keeps the single meridian arc of positions lying on the x-z plane
    (azimuth 0 or 180), deduplicating all azimuth-rotated views; if no pose
    lies on that arc, the nearest-to-0-azimuth pose per elevation ring is
    kept instead. Output is always a subset of the input, and the filter is
    idempotent.
    """
    if symmetry == "regular":
        return list(poses)
    pos = np.array([p.position for p in poses], dtype=np.float64)
    radius = np.linalg.norm(pos, axis=1)
    az = _azimuth_deg(pos[:, :2])
    if symmetry == "plane_symmetric":
        keep = az <= 180.0 + 1e-9
        return [p for p, k in zip(poses, keep) if k]
    # axis_symmetric
    on_meridian = np.abs(pos[:, 1]) <= 1e-9 * np.maximum(radius, 1.0)
    if on_meridian.any():
        return [p for p, k in zip(poses, on_meridian) if k]
    # generic fallback: one representative per elevation ring
    z_levels: list[float] = []
    rings: dict[int, int] = {}  # ring id -> pose index of current best
    zs = pos[:, 2] / np.maximum(radius, 1e-300)
    off_axis = np.minimum(az, 360.0 - az)  # distance to azimuth 0
    for i in range(len(poses)):
        ring = None
        for r, zl in enumerate(z_levels):
            if abs(zs[i] - zl) < 1e-6:
                ring = r
                break
        if ring is None:
            z_levels.append(float(zs[i]))
            ring = len(z_levels) - 1
        best = rings.get(ring)
        if best is None or off_axis[i] < off_axis[best] - 1e-12:
            rings[ring] = i
    keep_idx = sorted(rings.values())
    return [poses[i] for i in keep_idx]


def look_at_quaternion(position: np.ndarray, inplane_deg: float = 0.0) -> Quaternion:
    """Rotation of a camera at `position` looking at the origin.

    Camera axes: x right, y down, z forward (the view direction). The up
    vector is world +z projected off the view axis, falling back to world
    +x when looking along +-z; the in-plane roll is applied about the view
    axis afterwards.
    """
    position = np.asarray(position, dtype=np.float64)
    r = np.linalg.norm(position)
    if r == 0:
        raise ValueError("camera position must not be the origin")
    forward = -position / r
    up = np.array([0.0, 0.0, 1.0])
    up_proj = up - np.dot(up, forward) * forward
    if np.linalg.norm(up_proj) < 1e-8:
        up = np.array([1.0, 0.0, 0.0])
        up_proj = up - np.dot(up, forward) * forward
    up_proj /= np.linalg.norm(up_proj)
    down = -up_proj
    right = np.cross(down, forward)
    rot = np.column_stack([right, down, forward])
    if inplane_deg != 0.0:
        a = math.radians(inplane_deg)
        roll = np.array([
            [math.cos(a), -math.sin(a), 0.0],
            [math.sin(a), math.cos(a), 0.0],
            [0.0, 0.0, 1.0],
        ])
        rot = rot @ roll
    return Quaternion.from_matrix(rot)


def expand_inplane(poses: list[Pose],
                   inplane: Optional[tuple[float, float, float]]) -> list[Pose]:
    """Expand each pose into floor((max-min)/stride)+1 in-plane rolled copies."""
    if inplane is None:
        return list(poses)
    lo, hi, stride = inplane
    if hi < lo:
        raise ValueError("in-plane max must be >= min")
    if stride <= 0:
        raise ValueError("in-plane stride must be positive")
    steps = int(math.floor((hi - lo) / stride + 1e-9)) + 1
    out = []
    for p in poses:
        for k in range(steps):
            angle = lo + k * stride
            out.append(Pose(
                rotation=look_at_quaternion(p.position, angle),
                position=p.position,
                inplane_deg=angle,
                vertex_index=p.vertex_index,
            ))
    return out


def build_pose_set(config: ViewSphereConfig) -> list[Pose]:
    """Full pose list for one object under the given view-sphere config.

    Composition: icosphere -> hemisphere filter -> symmetry reduction ->
    in-plane expansion, with positions scaled to the configured radius.
    """
    verts = icosphere_vertices(config.subdivisions, config.orientation)
    kept = filter_hemisphere(verts, config.hemisphere, config.equator_rule)
    # carry original icosphere indices through the filters
    index_of = {tuple(v): i for i, v in enumerate(verts)}
    base = [Pose(rotation=look_at_quaternion(v * config.radius),
                 position=v * config.radius,
                 inplane_deg=0.0,
                 vertex_index=index_of[tuple(v)])
            for v in kept]
    base = apply_symmetry(base, config.symmetry)
    base.sort(key=lambda p: p.vertex_index)
    return expand_inplane(base, config.inplane)


def tless_config(radius: float = 600.0) -> ViewSphereConfig:
    """Full sphere, 3 subdivisions, no in-plane: 642 poses per object."""
    return ViewSphereConfig(subdivisions=3, radius=radius, hemisphere="full",
                            equator_rule="include", inplane=None, symmetry="regular")


def linemod_config(symmetry: str = "regular", radius: float = 600.0) -> ViewSphereConfig:
    """Upper hemisphere incl. equator, 3 subdivisions, -45:45:15 in-plane.

    Yields 2359 poses for regular objects, 1239 plane-symmetric, 119
    axis-symmetric.
    """
    return ViewSphereConfig(subdivisions=3, radius=radius, hemisphere="upper",
                            equator_rule="include", inplane=(-45.0, 45.0, 15.0),
                            symmetry=symmetry)
