import math

import numpy as np
import pytest

from syntheon.geometry import make_mesh

PHI = (1.0 + math.sqrt(5.0)) / 2.0

ICO_VERTS = np.array([
    (-1, PHI, 0), (1, PHI, 0), (-1, -PHI, 0), (1, -PHI, 0),
    (0, -1, PHI), (0, 1, PHI), (0, -1, -PHI), (0, 1, -PHI),
    (PHI, 0, -1), (PHI, 0, 1), (-PHI, 0, -1), (-PHI, 0, 1),
], dtype=float)
ICO_FACES = [
    (0, 11, 5), (0, 5, 1), (0, 1, 7), (0, 7, 10), (0, 10, 11),
    (1, 5, 9), (5, 11, 4), (11, 10, 2), (10, 7, 6), (7, 1, 8),
    (3, 9, 4), (3, 4, 2), (3, 2, 6), (3, 6, 8), (3, 8, 9),
    (4, 9, 5), (2, 4, 11), (6, 2, 10), (8, 6, 7), (9, 8, 1),
]

CUBE_CORNERS = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
# quad per cube face, outward winding
CUBE_QUADS = [
    (0, 1, 3, 2),  # x = 0
    (4, 6, 7, 5),  # x = 1
    (0, 4, 5, 1),  # y = 0
    (2, 3, 7, 6),  # y = 1
    (0, 2, 6, 4),  # z = 0
    (1, 5, 7, 3),  # z = 1
]


def sphere_mesh(radius=1.0, subdivisions=3, class_id=1):
    """Icosphere triangle mesh approximating a sphere of the given radius."""
    verts = [tuple(v / np.linalg.norm(v)) for v in ICO_VERTS]
    faces = list(ICO_FACES)
    for _ in range(subdivisions):
        cache = {}
        new_faces = []

        def mid(i, j):
            key = (min(i, j), max(i, j))
            if key not in cache:
                m = (np.asarray(verts[i]) + np.asarray(verts[j])) / 2.0
                m /= np.linalg.norm(m)
                verts.append(tuple(m))
                cache[key] = len(verts) - 1
            return cache[key]

        for a, b, c in faces:
            ab, bc, ca = mid(a, b), mid(b, c), mid(c, a)
            new_faces += [(a, ab, ca), (ab, b, bc), (ca, bc, c), (ab, bc, ca)]
        faces = new_faces
    return make_mesh(np.asarray(verts) * radius, faces, class_id, name="sphere")


@pytest.fixture
def cube_obj(tmp_path):
    """Unit cube OBJ with quad faces, one corner at the origin."""
    path = tmp_path / "cube.obj"
    lines = [f"v {x} {y} {z}" for x, y, z in CUBE_CORNERS]
    lines += ["f " + " ".join(str(i + 1) for i in quad) for quad in CUBE_QUADS]
    path.write_text("\n".join(lines) + "\n")
    return path


@pytest.fixture
def triangle_obj(tmp_path):
    path = tmp_path / "tri.obj"
    path.write_text("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n")
    return path


@pytest.fixture
def icosahedron_ply(tmp_path):
    """ASCII PLY of the regular icosahedron: 12 vertices, 20 faces."""
    path = tmp_path / "ico.ply"
    header = [
        "ply", "format ascii 1.0",
        "element vertex 12",
        "property float x", "property float y", "property float z",
        "element face 20",
        "property list uchar int vertex_indices",
        "end_header",
    ]
    body = [f"{v[0]:.9f} {v[1]:.9f} {v[2]:.9f}" for v in ICO_VERTS]
    body += ["3 " + " ".join(str(i) for i in f) for f in ICO_FACES]
    path.write_text("\n".join(header + body) + "\n")
    return path


@pytest.fixture
def icosahedron_ply_binary(tmp_path):
    import struct
    path = tmp_path / "ico_bin.ply"
    header = (
        "ply\nformat binary_little_endian 1.0\n"
        "element vertex 12\n"
        "property float x\nproperty float y\nproperty float z\n"
        "element face 20\n"
        "property list uchar int vertex_indices\n"
        "end_header\n"
    ).encode("ascii")
    blob = b""
    for v in ICO_VERTS:
        blob += struct.pack("<fff", *v)
    for f in ICO_FACES:
        blob += struct.pack("<Biii", 3, *f)
    path.write_bytes(header + blob)
    return path
