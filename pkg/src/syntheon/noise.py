"""Seeded procedural noise: gradient (Perlin), cellular (Worley F1), white.

All three are pure functions of (seed, coordinates) built on a splitmix64-
style integer hash, so results are identical across platforms, word orders
and parallel schedules. Coordinates are multiplied by `frequency` to enter
noise space; one noise-space unit is one lattice cell.

The hot loops are JIT-compiled with numba when it is importable (scalar
per-pixel code, no temporaries); a vectorized numpy fallback implements the
same arithmetic. Both paths share the exact hash and float32 interpolation
sequence, and each is deterministic run-to-run.
"""

from __future__ import annotations

import numpy as np

try:
    import numba

    def _jit(fn):
        return numba.njit(cache=True, fastmath=False)(fn)

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    def _jit(fn):
        return fn

    _HAVE_NUMBA = False

_U64 = np.uint64
_C1 = _U64(0x9E3779B97F4A7C15)
_C2 = _U64(0xBF58476D1CE4E5B9)
_C3 = _U64(0x94D049BB133111EB)
_C4 = _U64(0xC2B2AE3D27D4EB4F)
_TAG_MULT = _U64(0x9E3779B1)
_SHIFT30, _SHIFT27, _SHIFT31, _SHIFT40 = (_U64(30), _U64(27), _U64(31), _U64(40))
_INV_2_24 = np.float32(1.0 / (1 << 24))
_TAG_CELL_X = _U64(0x517C)
_TAG_CELL_Y = _U64(0xFEA7)

# 8 lattice gradients: axis-aligned unit + normalized diagonals
_S2 = 1.0 / np.sqrt(2.0)
_GRAD_X = np.array([1.0, -1.0, 0.0, 0.0, _S2, -_S2, _S2, -_S2], dtype=np.float32)
_GRAD_Y = np.array([0.0, 0.0, 1.0, -1.0, _S2, _S2, -_S2, -_S2], dtype=np.float32)
_SQRT2_F32 = np.float32(np.sqrt(2.0))


# ---------------------------------------------------------------------------
# Hashing (vectorized reference; the jitted kernels inline the same ops)
# ---------------------------------------------------------------------------

def _mix(h: np.ndarray) -> np.ndarray:
    """splitmix64 finalizer over uint64 values (scalar or array)."""
    with np.errstate(over="ignore"):  # modular uint64 arithmetic is intended
        h = (h + _C1).astype(_U64, copy=False)
        h ^= h >> _SHIFT30
        h *= _C2
        h ^= h >> _SHIFT27
        h *= _C3
        h ^= h >> _SHIFT31
    return h


_M64 = 0xFFFFFFFFFFFFFFFF


def _mix_int(h: int) -> int:
    """splitmix64 finalizer on plain ints; matches _mix bit for bit."""
    h = (h + 0x9E3779B97F4A7C15) & _M64
    h ^= h >> 30
    h = (h * 0xBF58476D1CE4E5B9) & _M64
    h ^= h >> 27
    h = (h * 0x94D049BB133111EB) & _M64
    h ^= h >> 31
    return h


def hash64(*values: int) -> int:
    """Combine integers into one 64-bit hash (used for derived seeds)."""
    h = 0x5DEECE66D
    for v in values:
        h = _mix_int(h ^ ((v & _M64) * 0xC2B2AE3D27D4EB4F & _M64))
    return h


def _lattice_hash(seed: int, xi: np.ndarray, yi: np.ndarray, tag: int = 0) -> np.ndarray:
    """One finalizer pass over a seeded linear fold of the coordinates."""
    with np.errstate(over="ignore"):
        h = _U64(seed & 0xFFFFFFFFFFFFFFFF) ^ (_U64(tag) * _TAG_MULT)
        h = h ^ (xi.astype(np.int64, copy=False).view(_U64) * _C1)
        h ^= yi.astype(np.int64, copy=False).view(_U64) * _C4
    return _mix(h)


def _to_unit_f32(h: np.ndarray) -> np.ndarray:
    """uint64 hash -> float32 uniform in [0, 1) with 24-bit resolution."""
    return (h >> _SHIFT40).astype(np.float32) * _INV_2_24


# ---------------------------------------------------------------------------
# Jitted scalar kernels
# ---------------------------------------------------------------------------

@_jit
def _hash_scalar(seed: np.uint64, xi: np.int64, yi: np.int64, tag: np.uint64) -> np.uint64:
    h = seed ^ (tag * _TAG_MULT)
    h = h ^ (np.uint64(xi) * _C1)
    h ^= np.uint64(yi) * _C4
    h = h + _C1
    h ^= h >> _SHIFT30
    h *= _C2
    h ^= h >> _SHIFT27
    h *= _C3
    h ^= h >> _SHIFT31
    return h


@_jit
def _white_kernel(seed, xi, yi, out):
    for i in range(xi.size):
        h = _hash_scalar(seed, xi[i], yi[i], _U64(0))
        out[i] = np.float32(h >> _SHIFT40) * _INV_2_24


@_jit
def _perlin_octave(px, py, scale, seed, amp, out):
    """Accumulate one octave into out; gradient components come from a
    precomputed lattice-box table when the box is smaller than the pixel
    count."""
    n = px.size
    minx = px[0] * scale
    maxx = minx
    miny = py[0] * scale
    maxy = miny
    for i in range(n):
        x = px[i] * scale
        y = py[i] * scale
        if x < minx:
            minx = x
        if x > maxx:
            maxx = x
        if y < miny:
            miny = y
        if y > maxy:
            maxy = y
    bx0 = np.int64(np.floor(minx))
    by0 = np.int64(np.floor(miny))
    nx = np.int64(np.floor(maxx)) - bx0 + 2
    ny = np.int64(np.floor(maxy)) - by0 + 2
    boxed = nx * ny <= 2 * n
    gx = np.empty((nx if boxed else 1) * (ny if boxed else 1), dtype=np.float32)
    gy = np.empty_like(gx)
    if boxed:
        k = 0
        for a in range(nx):
            for b in range(ny):
                g = _hash_scalar(seed, bx0 + a, by0 + b, _U64(0)) & _U64(7)
                gx[k] = _GRAD_X[g]
                gy[k] = _GRAD_Y[g]
                k += 1
    one = np.float32(1.0)
    for i in range(n):
        x = px[i] * scale
        y = py[i] * scale
        x0 = np.floor(x)
        y0 = np.floor(y)
        xi = np.int64(x0)
        yi = np.int64(y0)
        fx = np.float32(x - x0)
        fy = np.float32(y - y0)
        if boxed:
            base = (xi - bx0) * ny + (yi - by0)
            gx00 = gx[base]
            gy00 = gy[base]
            gx10 = gx[base + ny]
            gy10 = gy[base + ny]
            gx01 = gx[base + 1]
            gy01 = gy[base + 1]
            gx11 = gx[base + ny + 1]
            gy11 = gy[base + ny + 1]
        else:
            g00 = _hash_scalar(seed, xi, yi, _U64(0)) & _U64(7)
            g10 = _hash_scalar(seed, xi + 1, yi, _U64(0)) & _U64(7)
            g01 = _hash_scalar(seed, xi, yi + 1, _U64(0)) & _U64(7)
            g11 = _hash_scalar(seed, xi + 1, yi + 1, _U64(0)) & _U64(7)
            gx00 = _GRAD_X[g00]
            gy00 = _GRAD_Y[g00]
            gx10 = _GRAD_X[g10]
            gy10 = _GRAD_Y[g10]
            gx01 = _GRAD_X[g01]
            gy01 = _GRAD_Y[g01]
            gx11 = _GRAD_X[g11]
            gy11 = _GRAD_Y[g11]
        n00 = gx00 * fx + gy00 * fy
        n10 = gx10 * (fx - one) + gy10 * fy
        n01 = gx01 * fx + gy01 * (fy - one)
        n11 = gx11 * (fx - one) + gy11 * (fy - one)
        u = fx * fx * fx * (fx * (fx * np.float32(6.0) - np.float32(15.0)) + np.float32(10.0))
        v = fy * fy * fy * (fy * (fy * np.float32(6.0) - np.float32(15.0)) + np.float32(10.0))
        nx0 = n00 + u * (n10 - n00)
        nx1 = n01 + u * (n11 - n01)
        out[i] += amp * ((nx0 + v * (nx1 - nx0)) * _SQRT2_F32)


@_jit
def _perlin_kernel(px, py, oct_seeds, oct_scales, oct_amps, amp_sum, out):
    for i in range(out.size):
        out[i] = np.float32(0.0)
    for o in range(oct_seeds.size):
        _perlin_octave(px, py, oct_scales[o], oct_seeds[o], oct_amps[o], out)
    for i in range(out.size):
        out[i] = out[i] / amp_sum


@_jit
def _cellular_kernel(px, py, seed, out):
    n = px.size
    minx = px[0]
    maxx = minx
    miny = py[0]
    maxy = miny
    for i in range(n):
        if px[i] < minx:
            minx = px[i]
        if px[i] > maxx:
            maxx = px[i]
        if py[i] < miny:
            miny = py[i]
        if py[i] > maxy:
            maxy = py[i]
    # feature table covers cells [c0-1 .. c1+1]
    bx0 = np.int64(np.floor(minx)) - 1
    by0 = np.int64(np.floor(miny)) - 1
    nx = np.int64(np.floor(maxx)) + 2 - bx0
    ny = np.int64(np.floor(maxy)) + 2 - by0
    boxed = nx * ny <= 2 * n
    fxs = np.empty((nx if boxed else 1, ny if boxed else 1), dtype=np.float64)
    fys = np.empty_like(fxs)
    if boxed:
        for a in range(nx):
            for b in range(ny):
                cx = bx0 + a
                cy = by0 + b
                jx = np.float32(_hash_scalar(seed, cx, cy, _TAG_CELL_X) >> _SHIFT40) * _INV_2_24
                jy = np.float32(_hash_scalar(seed, cx, cy, _TAG_CELL_Y) >> _SHIFT40) * _INV_2_24
                fxs[a, b] = np.float64(cx) + np.float64(jx)
                fys[a, b] = np.float64(cy) + np.float64(jy)
    for i in range(n):
        cx = np.int64(np.floor(px[i]))
        cy = np.int64(np.floor(py[i]))
        best = np.inf
        for dx in range(-1, 2):
            for dy in range(-1, 2):
                ncx = cx + dx
                ncy = cy + dy
                if boxed:
                    fx = fxs[ncx - bx0, ncy - by0]
                    fy = fys[ncx - bx0, ncy - by0]
                else:
                    jx = np.float32(_hash_scalar(seed, ncx, ncy, _TAG_CELL_X) >> _SHIFT40) * _INV_2_24
                    jy = np.float32(_hash_scalar(seed, ncx, ncy, _TAG_CELL_Y) >> _SHIFT40) * _INV_2_24
                    fx = np.float64(ncx) + np.float64(jx)
                    fy = np.float64(ncy) + np.float64(jy)
                ddx = px[i] - fx
                ddy = py[i] - fy
                d2 = ddx * ddx + ddy * ddy
                if d2 < best:
                    best = d2
        out[i] = np.sqrt(best)


# ---------------------------------------------------------------------------
# Vectorized fallbacks (same arithmetic, numpy only)
# ---------------------------------------------------------------------------

def _fade(t: np.ndarray) -> np.ndarray:
    return t * t * t * (t * (t * np.float32(6.0) - np.float32(15.0)) + np.float32(10.0))


def _perlin_base_numpy(seed: int, px: np.ndarray, py: np.ndarray) -> np.ndarray:
    x0 = np.floor(px)
    y0 = np.floor(py)
    xi = x0.astype(np.int64)
    yi = y0.astype(np.int64)
    # offsets are exact in float64; cast keeps lattice zeros exact in float32
    fx = (px - x0).astype(np.float32)
    fy = (py - y0).astype(np.float32)
    one = np.float32(1.0)

    def corner(dx, dy, fxo, fyo):
        g = (_lattice_hash(seed, xi + dx, yi + dy) & _U64(7)).astype(np.intp)
        return _GRAD_X[g] * fxo + _GRAD_Y[g] * fyo

    n00 = corner(0, 0, fx, fy)
    n10 = corner(1, 0, fx - one, fy)
    n01 = corner(0, 1, fx, fy - one)
    n11 = corner(1, 1, fx - one, fy - one)
    u = _fade(fx)
    v = _fade(fy)
    nx0 = n00 + u * (n10 - n00)
    nx1 = n01 + u * (n11 - n01)
    return (nx0 + v * (nx1 - nx0)) * _SQRT2_F32


def _perlin_numpy(px, py, oct_seeds, oct_scales, oct_amps, amp_sum):
    total = np.zeros(px.shape, dtype=np.float32)
    for o in range(len(oct_seeds)):
        total += oct_amps[o] * _perlin_base_numpy(int(oct_seeds[o]),
                                                  px * oct_scales[o],
                                                  py * oct_scales[o])
    return total / amp_sum


def _cellular_numpy(px, py, seed):
    cx = np.floor(px).astype(np.int64)
    cy = np.floor(py).astype(np.int64)
    best = np.full(px.shape, np.inf)
    for dx in (-1, 0, 1):
        for dy in (-1, 0, 1):
            fx, fy = cellular_feature(seed, cx + dx, cy + dy)
            d2 = (px - fx) ** 2 + (py - fy) ** 2
            best = np.minimum(best, d2)
    return np.sqrt(best)


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------

def white(seed: int, x, y):
    """Per-pixel uniform noise in [0, 1); i.i.d.-like across integer coords."""
    xa = np.asarray(x, dtype=np.float64)
    ya = np.asarray(y, dtype=np.float64)
    shape = np.broadcast(xa, ya).shape
    xi = np.broadcast_to(np.floor(xa), shape).astype(np.int64).ravel()
    yi = np.broadcast_to(np.floor(ya), shape).astype(np.int64).ravel()
    if _HAVE_NUMBA:
        out = np.empty(xi.size, dtype=np.float32)
        _white_kernel(_U64(seed & 0xFFFFFFFFFFFFFFFF), xi, yi, out)
        out = out.reshape(shape)
    else:
        out = _to_unit_f32(_lattice_hash(seed, xi, yi)).reshape(shape)
    return out if out.ndim else float(out)


def perlin(seed: int, frequency: float, x, y,
           octaves: int = 1, persistence: float = 0.5):
    """Gradient noise in [-1, 1]; zero at noise-space integer lattice points.

    With octaves > 1 the octave sum is renormalized by the total amplitude,
    each octave doubling the frequency and scaling by `persistence`.
    """
    if frequency <= 0:
        raise ValueError("frequency must be positive")
    xa = np.asarray(x, dtype=np.float64)
    ya = np.asarray(y, dtype=np.float64)
    shape = np.broadcast(xa, ya).shape
    px = np.broadcast_to(xa * frequency, shape).ravel()
    py = np.broadcast_to(ya * frequency, shape).ravel()
    oct_seeds = np.array([hash64(seed, k) for k in range(octaves)], dtype=_U64)
    oct_scales = np.array([float(1 << k) for k in range(octaves)])
    oct_amps = (np.float32(persistence) ** np.arange(octaves, dtype=np.float32))
    amp_sum = np.float32(oct_amps.sum(dtype=np.float64))
    if _HAVE_NUMBA:
        out = np.empty(px.size, dtype=np.float32)
        _perlin_kernel(px, py, oct_seeds, oct_scales, oct_amps, amp_sum, out)
        out = out.reshape(shape)
    else:
        out = (_perlin_numpy(px, py, oct_seeds, oct_scales, oct_amps, amp_sum)
               .reshape(shape))
    return out if out.ndim else float(out)


def cellular_feature(seed: int, cx, cy) -> tuple[np.ndarray, np.ndarray]:
    """Noise-space position of the feature point in cell (cx, cy)."""
    cx = np.asarray(cx, dtype=np.int64)
    cy = np.asarray(cy, dtype=np.int64)
    jx = _to_unit_f32(_lattice_hash(seed, cx, cy, tag=0x517C))
    jy = _to_unit_f32(_lattice_hash(seed, cx, cy, tag=0xFEA7))
    return cx + jx.astype(np.float64), cy + jy.astype(np.float64)


def cellular(seed: int, frequency: float, x, y):
    """Worley F1: distance to the nearest feature point, in cell units (>= 0).

    One feature point per lattice cell; the nearest is found over the 3x3
    cell neighborhood. 1-Lipschitz in noise space, hence Lipschitz constant
    `frequency` in input coordinates.
    """
    if frequency <= 0:
        raise ValueError("frequency must be positive")
    xa = np.asarray(x, dtype=np.float64)
    ya = np.asarray(y, dtype=np.float64)
    shape = np.broadcast(xa, ya).shape
    px = np.broadcast_to(xa * frequency, shape).ravel()
    py = np.broadcast_to(ya * frequency, shape).ravel()
    if _HAVE_NUMBA:
        out = np.empty(px.size, dtype=np.float64)
        _cellular_kernel(px, py, _U64(seed & 0xFFFFFFFFFFFFFFFF), out)
        out = out.reshape(shape)
    else:
        out = _cellular_numpy(px, py, seed).reshape(shape)
    return out if out.ndim else float(out)
