"""Mesh ingestion and shared value types (meshes, quaternions).

Meshes are indexed triangle soups in millimeters. Quad faces are
fan-triangulated on load; faces with more than 4 vertices are rejected.
All types are immutable after construction and safe to share across
workers.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np


class MeshError(ValueError):
    """Raised when a mesh file cannot be parsed into valid triangle geometry."""


# ---------------------------------------------------------------------------
# Quaternions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Quaternion:
    """Unit rotation quaternion. q and -q represent the same rotation."""

    w: float
    x: float
    y: float
    z: float

    def norm(self) -> float:
        return float(np.sqrt(self.w ** 2 + self.x ** 2 + self.y ** 2 + self.z ** 2))

    def normalized(self) -> "Quaternion":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize zero quaternion")
        return Quaternion(self.w / n, self.x / n, self.y / n, self.z / n)

    def canonical(self) -> "Quaternion":
        """Sign-canonical form (first nonzero component positive)."""
        for c in (self.w, self.x, self.y, self.z):
            if c != 0.0:
                return self if c > 0 else Quaternion(-self.w, -self.x, -self.y, -self.z)
        raise ValueError("zero quaternion has no canonical form")

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    def to_matrix(self) -> np.ndarray:
        """3x3 rotation matrix for the unit quaternion."""
        w, x, y, z = self.w, self.x, self.y, self.z
        return np.array([
            [1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)],
            [2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)],
            [2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)],
        ])

    def rotate(self, v) -> np.ndarray:
        return self.to_matrix() @ np.asarray(v, dtype=float)

    @staticmethod
    def from_matrix(m: np.ndarray) -> "Quaternion":
        """Quaternion from a proper rotation matrix (Shepperd's method)."""
        m = np.asarray(m, dtype=float)
        t = np.trace(m)
        if t > 0:
            s = np.sqrt(t + 1.0) * 2
            w = 0.25 * s
            x = (m[2, 1] - m[1, 2]) / s
            y = (m[0, 2] - m[2, 0]) / s
            z = (m[1, 0] - m[0, 1]) / s
        elif m[0, 0] > m[1, 1] and m[0, 0] > m[2, 2]:
            s = np.sqrt(1.0 + m[0, 0] - m[1, 1] - m[2, 2]) * 2
            w = (m[2, 1] - m[1, 2]) / s
            x = 0.25 * s
            y = (m[0, 1] + m[1, 0]) / s
            z = (m[0, 2] + m[2, 0]) / s
        elif m[1, 1] > m[2, 2]:
            s = np.sqrt(1.0 + m[1, 1] - m[0, 0] - m[2, 2]) * 2
            w = (m[0, 2] - m[2, 0]) / s
            x = (m[0, 1] + m[1, 0]) / s
            y = 0.25 * s
            z = (m[1, 2] + m[2, 1]) / s
        else:
            s = np.sqrt(1.0 + m[2, 2] - m[0, 0] - m[1, 1]) * 2
            w = (m[1, 0] - m[0, 1]) / s
            x = (m[0, 2] + m[2, 0]) / s
            y = (m[1, 2] + m[2, 1]) / s
            z = 0.25 * s
        return Quaternion(w, x, y, z).normalized().canonical()


def quat_angular_distance(a: Quaternion, b: Quaternion) -> float:
    """Angular distance 2*arccos(|a.b|) between two unit quaternions, in [0, pi].

    Symmetric, zero iff the rotations coincide (up to quaternion sign).
    The dot product is clamped to [0, 1] before arccos so the result is
    finite even when rounding pushes |a.b| slightly above 1.
    """
    for q in (a, b):
        if abs(q.norm() - 1.0) > 1e-6:
            raise ValueError(f"non-unit quaternion (norm {q.norm():.9f})")
    dot = abs(float(np.dot(a.as_array(), b.as_array())))
    return 2.0 * float(np.arccos(min(dot, 1.0)))


# ---------------------------------------------------------------------------
# Mesh
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Mesh:
    """Indexed triangle mesh of one object class, in millimeters.

    face_normals are unit length; class_id >= 1 (0 is the background label).
    """

    vertices: np.ndarray        # (V, 3) float64, mm
    faces: np.ndarray           # (F, 3) int32 vertex indices
    face_normals: np.ndarray    # (F, 3) float64, unit
    class_id: int
    bounding_radius: float = field(default=0.0)
    name: str = ""

    def __post_init__(self):
        if self.class_id < 1:
            raise MeshError(f"class_id must be >= 1, got {self.class_id}")
        if len(self.faces) == 0 or len(self.vertices) == 0:
            raise MeshError("empty mesh")
        if self.faces.max() >= len(self.vertices):
            raise MeshError("face index out of range")

    @property
    def num_faces(self) -> int:
        return len(self.faces)


def _face_normals(vertices: np.ndarray, faces: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Unit normals per face; degenerate (zero-area) faces are dropped."""
    a = vertices[faces[:, 0]]
    b = vertices[faces[:, 1]]
    c = vertices[faces[:, 2]]
    n = np.cross(b - a, c - a)
    length = np.linalg.norm(n, axis=1)
    keep = length > 1e-12
    return faces[keep], n[keep] / length[keep, None]


def _bounding_radius(vertices: np.ndarray) -> float:
    center = (vertices.min(axis=0) + vertices.max(axis=0)) / 2.0
    return float(np.linalg.norm(vertices - center, axis=1).max())


def make_mesh(vertices, faces, class_id: int, name: str = "") -> Mesh:
    """Build a Mesh with recomputed unit face normals and bounding radius."""
    vertices = np.asarray(vertices, dtype=np.float64).reshape(-1, 3)
    faces = np.asarray(faces, dtype=np.int32).reshape(-1, 3)
    if len(vertices) == 0 or len(faces) == 0:
        raise MeshError("empty geometry")
    if faces.min() < 0 or faces.max() >= len(vertices):
        raise MeshError("face index out of range")
    faces, normals = _face_normals(vertices, faces)
    if len(faces) == 0:
        raise MeshError("all faces degenerate")
    vertices.setflags(write=False)
    faces.setflags(write=False)
    normals.setflags(write=False)
    return Mesh(vertices, faces, normals, class_id,
                bounding_radius=_bounding_radius(vertices), name=name)


def normalize_pose_frame(mesh: Mesh) -> Mesh:
    """Translate vertices so the bounding-box center sits at the origin.

    Idempotent; the bounding radius is recomputed from the centered vertices.
    """
    center = (mesh.vertices.min(axis=0) + mesh.vertices.max(axis=0)) / 2.0
    return make_mesh(mesh.vertices - center, mesh.faces, mesh.class_id, name=mesh.name)


# ---------------------------------------------------------------------------
# OBJ / PLY readers, debug OBJ writer
# ---------------------------------------------------------------------------

def _triangulate(idx: list[int], lineno: int) -> list[tuple[int, int, int]]:
    if len(idx) == 3:
        return [(idx[0], idx[1], idx[2])]
    if len(idx) == 4:
        return [(idx[0], idx[1], idx[2]), (idx[0], idx[2], idx[3])]
    raise MeshError(f"face with {len(idx)} vertices at line {lineno} (only tris/quads supported)")


def _load_obj(path: Path) -> tuple[list, list]:
    vertices, faces = [], []
    with open(path, "r", errors="replace") as f:
        for lineno, line in enumerate(f, 1):
            tokens = line.split()
            if not tokens or tokens[0].startswith("#"):
                continue
            if tokens[0] == "v":
                if len(tokens) < 4:
                    raise MeshError(f"malformed vertex at line {lineno}")
                vertices.append([float(t) for t in tokens[1:4]])
            elif tokens[0] == "f":
                idx = []
                for t in tokens[1:]:
                    raw = int(t.split("/")[0])
                    # OBJ indices are 1-based; negative counts from the end
                    idx.append(raw - 1 if raw > 0 else len(vertices) + raw)
                faces.extend(_triangulate(idx, lineno))
    return vertices, faces


_PLY_TYPES = {
    "char": "b", "int8": "b", "uchar": "B", "uint8": "B",
    "short": "h", "int16": "h", "ushort": "H", "uint16": "H",
    "int": "i", "int32": "i", "uint": "I", "uint32": "I",
    "float": "f", "float32": "f", "double": "d", "float64": "d",
}


def _load_ply(path: Path) -> tuple[list, list]:
    with open(path, "rb") as f:
        if f.readline().strip() != b"ply":
            raise MeshError("not a PLY file")
        fmt = None
        elements = []  # (name, count, [(prop_name, type) or ('list', count_t, item_t, name)])
        while True:
            line = f.readline()
            if not line:
                raise MeshError("unterminated PLY header")
            tokens = line.decode("ascii", errors="replace").split()
            if not tokens or tokens[0] == "comment":
                continue
            if tokens[0] == "format":
                fmt = tokens[1]
            elif tokens[0] == "element":
                elements.append((tokens[1], int(tokens[2]), []))
            elif tokens[0] == "property":
                if not elements:
                    raise MeshError("property before element in PLY header")
                if tokens[1] == "list":
                    elements[-1][2].append(("list", tokens[2], tokens[3], tokens[4]))
                else:
                    elements[-1][2].append((tokens[2], tokens[1]))
            elif tokens[0] == "end_header":
                break
        if fmt not in ("ascii", "binary_little_endian", "binary_big_endian"):
            raise MeshError(f"unsupported PLY format {fmt!r}")

        vertices, faces = [], []
        if fmt == "ascii":
            for name, count, props in elements:
                for _ in range(count):
                    tokens = f.readline().split()
                    if name == "vertex":
                        vals = {p[0]: float(t) for p, t in zip(props, tokens)}
                        vertices.append([vals["x"], vals["y"], vals["z"]])
                    elif name == "face":
                        n = int(tokens[0])
                        faces.extend(_triangulate([int(t) for t in tokens[1:1 + n]], 0))
        else:
            endian = "<" if fmt == "binary_little_endian" else ">"
            for name, count, props in elements:
                for _ in range(count):
                    if name == "face" and props and props[0][0] == "list":
                        _, count_t, item_t, _pname = props[0]
                        n = struct.unpack(endian + _PLY_TYPES[count_t],
                                          f.read(struct.calcsize(_PLY_TYPES[count_t])))[0]
                        fmt_items = endian + _PLY_TYPES[item_t] * n
                        idx = list(struct.unpack(fmt_items, f.read(struct.calcsize(fmt_items))))
                        faces.extend(_triangulate(idx, 0))
                        # trailing scalar properties after the list are not supported
                    else:
                        fmt_row = endian + "".join(_PLY_TYPES[t] for _, t in props
                                                   if _ != "list")
                        row = struct.unpack(fmt_row, f.read(struct.calcsize(fmt_row)))
                        if name == "vertex":
                            vals = {p[0]: v for p, v in zip(props, row)}
                            vertices.append([vals["x"], vals["y"], vals["z"]])
        return vertices, faces


def load_mesh(path, class_id: int, scale: float = 1.0) -> Mesh:
    """Load an OBJ or PLY triangle mesh, assuming file units are millimeters.

    Quads are fan-triangulated; normals are recomputed from geometry. `scale`
    multiplies coordinates for datasets whose files are not in mm.
    """
    path = Path(path)
    if not path.is_file():
        raise MeshError(f"cannot read mesh file {path}")
    suffix = path.suffix.lower()
    if suffix == ".obj":
        vertices, faces = _load_obj(path)
    elif suffix == ".ply":
        vertices, faces = _load_ply(path)
    else:
        raise MeshError(f"unsupported mesh format {suffix!r} (want .obj or .ply)")
    if not vertices or not faces:
        raise MeshError(f"no triangle geometry in {path}")
    vertices = np.asarray(vertices, dtype=np.float64)
    if scale != 1.0:
        vertices = vertices * scale
    return make_mesh(vertices, faces, class_id, name=path.stem)


def save_obj(mesh: Mesh, path) -> None:
    """Debug OBJ dump; coordinates at 1e-6 mm precision."""
    with open(path, "w") as f:
        f.write(f"# syntheon debug dump: {mesh.name or 'mesh'}\n")
        for v in mesh.vertices:
            f.write(f"v {v[0]:.6f} {v[1]:.6f} {v[2]:.6f}\n")
        for a, b, c in mesh.faces:
            f.write(f"f {a + 1} {b + 1} {c + 1}\n")
