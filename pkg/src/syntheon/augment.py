"""Stochastic augmentation pipeline: clean modality stack -> color image.

Five stages run in a fixed order: shading, texturing, background,
occlusion, blur. Every random choice is drawn once into a NoiseVector, so
the pipeline itself is a pure function of (stack, noise vector, patch
corpus bytes): equal inputs give bit-identical samples under any worker
schedule. Per-pixel randomness comes from the integer-hash noise fields in
`noise`, never from shared RNG state.

Sampling supports (held in the noise vector, version 1):
  ambient U(0.05, 0.3)^3, diffuse U(0.1, 0.8)^3, specular U(0, 0.1)^3,
  shininess U(0.9, 1.1), light direction uniform on the camera-side
  hemisphere; texture/background noise frequencies U(0.0001, 0.1);
  occlusion center from the half/half mixture of U(0, l/4) and U(l/4, l),
  average radius U(10, l/4), vertex count uniform on {3..10}, spikeyness
  U(0, 0.5), irregularity U(0, 2*pi/n_vert); blur kind uniform over
  {gaussian, uniform, median, none} with kernel size 1 + 2*floor(3u).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from functools import lru_cache
from pathlib import Path
from typing import Optional

import numpy as np
import scipy.ndimage as ndi

from . import noise
from ._selection_networks import median25 as _median25, median49 as _median49
from .noise import _HAVE_NUMBA, _jit
from .raster import ModalityStack
from .viewsphere import Pose

DISTRIBUTION_VERSION = 1

_NOISE_KINDS = ("perlin", "cellular", "white")
_BLUR_KINDS = ("gaussian", "uniform", "median", "none")
_AXES = ("X", "Y", "Z")
# normal-map channels are (down, right, toward); X drops the horizontal
# component, Y the vertical one, Z the toward-camera one
_AXIS_CHANNEL = {"X": 1, "Y": 0, "Z": 2}


class AugmentError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Noise vector
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LightingParams:
    direction: tuple[float, float, float]   # unit, in the (down, right, toward) frame
    ambient: tuple[float, float, float]
    diffuse: tuple[float, float, float]
    specular: tuple[float, float, float]
    shininess: float


@dataclass(frozen=True)
class TexturingParams:
    mode: str                  # hsl_merge | uv_texture
    hue_kind: str
    sat_kind: str
    hue_freq: float
    sat_freq: float
    hue_seed: int
    sat_seed: int
    dropped_axis: str          # X | Y | Z (uv_texture mode)
    octaves: int = 4
    persistence: float = 0.5


@dataclass(frozen=True)
class BackgroundParams:
    source: str                              # procedural | image_patch
    kinds: tuple[str, str, str]              # noise kind per H, S, L channel
    freqs: tuple[float, float, float]
    seeds: tuple[int, int, int]
    patch_index: int
    crop: tuple[float, float, float]         # (x0 frac, y0 frac, side frac)
    flip: bool


@dataclass(frozen=True)
class OcclusionParams:
    enabled: bool
    cx: float
    cy: float
    r_ave: float
    n_vert: int
    irregularity: float        # epsilon: spread of the angular steps
    spikeyness: float          # sigma: radius stddev as a fraction of r_ave
    shape_seed: int
    fill_seed: int


@dataclass(frozen=True)
class BlurParams:
    kind: str                  # gaussian | uniform | median | none
    intensity: float           # u in [0,1]; kernel size = 1 + 2*floor(3u)


@dataclass(frozen=True)
class NoiseVector:
    """Complete record of one augmentation draw; the sole randomness source."""

    lighting: LightingParams
    texturing: TexturingParams
    background: BackgroundParams
    occlusion: OcclusionParams
    blur: BlurParams
    version: int = DISTRIBUTION_VERSION

    def to_dict(self) -> dict:
        return asdict(self)

    @staticmethod
    def from_dict(d: dict) -> "NoiseVector":
        def tup(x):
            return tuple(x)
        return NoiseVector(
            lighting=LightingParams(
                direction=tup(d["lighting"]["direction"]),
                ambient=tup(d["lighting"]["ambient"]),
                diffuse=tup(d["lighting"]["diffuse"]),
                specular=tup(d["lighting"]["specular"]),
                shininess=d["lighting"]["shininess"]),
            texturing=TexturingParams(**d["texturing"]),
            background=BackgroundParams(
                source=d["background"]["source"],
                kinds=tup(d["background"]["kinds"]),
                freqs=tup(d["background"]["freqs"]),
                seeds=tup(d["background"]["seeds"]),
                patch_index=d["background"]["patch_index"],
                crop=tup(d["background"]["crop"]),
                flip=d["background"]["flip"]),
            occlusion=OcclusionParams(**d["occlusion"]),
            blur=BlurParams(**d["blur"]),
            version=d.get("version", DISTRIBUTION_VERSION),
        )


@dataclass
class AugmentedSample:
    """64x64 color sample in [-1, 1] plus everything needed to replay it."""

    rgb: np.ndarray        # (h, w, 3) float32 in [-1, 1]
    lightness: np.ndarray  # (h, w) float32 in [0, 1], pre-texturing shading
    class_id: int
    pose: Optional[Pose]
    noise_vector: NoiseVector
    seed: Optional[int] = None


def sample_noise_vector(seed: int, image_size: tuple[int, int] = (64, 64),
                        allow_patches: bool = True) -> NoiseVector:
    """Draw one noise vector deterministically from a 64-bit seed.

    The draw layout is fixed (42 unit uniforms followed by 8 raw 63-bit
    integers; new fields must append) so recorded vectors replay across
    versions of the caller. When allow_patches is false the background
    source is forced to procedural after its coin is consumed, keeping the
    rest of the sequence aligned.
    """
    lx, ly = image_size
    rng = np.random.default_rng(seed & 0xFFFFFFFFFFFFFFFF)
    u = rng.random(42)
    g = rng.integers(2 ** 63, size=8)

    def span(i, lo, hi):
        return float(lo + (hi - lo) * u[i])

    def pick(i, options):
        return options[int(u[i] * len(options))]

    z = u[0]
    phi = 2.0 * math.pi * u[1]
    r = math.sqrt(max(1.0 - z * z, 0.0))
    lighting = LightingParams(
        direction=(r * math.cos(phi), r * math.sin(phi), float(z)),
        ambient=(span(2, 0.05, 0.3), span(3, 0.05, 0.3), span(4, 0.05, 0.3)),
        diffuse=(span(5, 0.1, 0.8), span(6, 0.1, 0.8), span(7, 0.1, 0.8)),
        specular=(span(8, 0.0, 0.1), span(9, 0.0, 0.1), span(10, 0.0, 0.1)),
        shininess=span(11, 0.9, 1.1),
    )

    texturing = TexturingParams(
        mode=pick(12, ("hsl_merge", "uv_texture")),
        hue_kind=pick(13, _NOISE_KINDS),
        sat_kind=pick(14, _NOISE_KINDS),
        hue_freq=span(15, 1e-4, 0.1),
        sat_freq=span(16, 1e-4, 0.1),
        hue_seed=int(g[0]),
        sat_seed=int(g[1]),
        dropped_axis=pick(17, _AXES),
    )

    source = pick(18, ("procedural", "image_patch"))
    if not allow_patches:
        source = "procedural"
    background = BackgroundParams(
        source=source,
        kinds=(pick(19, _NOISE_KINDS), pick(20, _NOISE_KINDS), pick(21, _NOISE_KINDS)),
        freqs=(span(22, 1e-4, 0.1), span(23, 1e-4, 0.1), span(24, 1e-4, 0.1)),
        seeds=(int(g[2]), int(g[3]), int(g[4])),
        patch_index=int(g[5] & 0x7FFFFFFF),
        crop=(float(u[25]), float(u[26]), span(27, 0.3, 1.0)),
        flip=bool(u[28] < 0.5),
    )

    l = min(lx, ly)
    # centers: an even mixture of a near-corner and a wide uniform component
    cx = span(31, 0.0, lx / 4.0) if u[30] < 0.5 else span(32, lx / 4.0, lx)
    cy = span(34, 0.0, ly / 4.0) if u[33] < 0.5 else span(35, ly / 4.0, ly)
    n_vert = 3 + int(u[37] * 8)
    occlusion = OcclusionParams(
        enabled=bool(u[29] < 0.5),
        cx=cx, cy=cy,
        r_ave=span(36, 10.0, l / 4.0),
        n_vert=n_vert,
        irregularity=span(38, 0.0, 2.0 * math.pi / n_vert),
        spikeyness=span(39, 0.0, 0.5),
        shape_seed=int(g[6]),
        fill_seed=int(g[7]),
    )

    blur_params = BlurParams(
        kind=pick(40, _BLUR_KINDS),
        intensity=float(u[41]),
    )
    return NoiseVector(lighting, texturing, background, occlusion, blur_params)


# ---------------------------------------------------------------------------
# Stage 1: shading
# ---------------------------------------------------------------------------

@lru_cache(maxsize=8)
def _view_grid(h: int, w: int, fy: float, fx: float) -> np.ndarray:
    """Per-pixel unit view vectors in the (down, right, toward) frame."""
    jj, ii = np.meshgrid(np.arange(h, dtype=np.float64),
                         np.arange(w, dtype=np.float64), indexing="ij")
    v = np.stack([-(jj - h / 2.0) / fy, -(ii - w / 2.0) / fx, np.ones_like(jj)],
                 axis=2)
    v /= np.linalg.norm(v, axis=2, keepdims=True)
    return v.astype(np.float32)


@_jit
def _shade_kernel(normal, view, light, amb, dif, spec, shininess,
                  normalize_half, out):
    h, w = normal.shape[0], normal.shape[1]
    zero = np.float32(0.0)
    one = np.float32(1.0)
    for j in range(h):
        for i in range(w):
            n0 = normal[j, i, 0]
            n1 = normal[j, i, 1]
            n2 = normal[j, i, 2]
            h0 = view[j, i, 0] + light[0]
            h1 = view[j, i, 1] + light[1]
            h2 = view[j, i, 2] + light[2]
            if normalize_half:
                inv = one / np.float32(np.sqrt(h0 * h0 + h1 * h1 + h2 * h2))
                h0 *= inv
                h1 *= inv
                h2 *= inv
            diffuse = n0 * light[0] + n1 * light[1] + n2 * light[2]
            base = max(n0 * h0 + n1 * h1 + n2 * h2, zero)
            specular = base ** shininess
            for c in range(3):
                m = amb[c] + dif[c] * diffuse + spec[c] * specular
                out[j, i, c] = min(max(m, zero), one)


def shade(normal: np.ndarray, lighting: LightingParams, focal,
          normalize_half: bool = False) -> np.ndarray:
    """Approximate Blinn-Phong lightness map from a normal map.

    The light sits at infinite distance (one direction for all pixels); the
    viewer vector is recovered from pixel indices and the focal length. The
    half vector H = V + L is used unnormalized, as sampled shading should
    match the recorded convention; normalize_half switches to classic
    Blinn-Phong. The specular base N.H is clamped at zero before the
    fractional exponent. Background pixels (zero normals) receive the
    ambient term only. Output is per-channel clamped to [0, 1].
    """
    fy, fx = (focal, focal) if np.isscalar(focal) else focal
    params = (*lighting.direction, *lighting.ambient, *lighting.diffuse,
              *lighting.specular, lighting.shininess, fy, fx)
    if not np.all(np.isfinite(params)) or fy <= 0 or fx <= 0:
        raise AugmentError("non-finite or non-positive shading parameter")
    h, w = normal.shape[:2]
    v = _view_grid(h, w, float(fy), float(fx))
    light = np.asarray(lighting.direction, dtype=np.float32)
    n = normal.astype(np.float32, copy=False)
    a = np.asarray(lighting.ambient, dtype=np.float32)
    d = np.asarray(lighting.diffuse, dtype=np.float32)
    s = np.asarray(lighting.specular, dtype=np.float32)
    if _HAVE_NUMBA:
        out = np.empty((h, w, 3), dtype=np.float32)
        _shade_kernel(n, v, light, a, d, s, np.float32(lighting.shininess),
                      normalize_half, out)
        return out
    half = v + light
    if normalize_half:
        half = half / np.linalg.norm(half, axis=2, keepdims=True)
    diffuse = n @ light
    spec_base = np.maximum(np.einsum("ijk,ijk->ij", n, half), 0.0)
    specular = spec_base ** np.float32(lighting.shininess)
    m = a + d * diffuse[..., None] + s * specular[..., None]
    return np.clip(m, 0.0, 1.0)


# ---------------------------------------------------------------------------
# Stage 2: texturing
# ---------------------------------------------------------------------------

@_jit
def _hsl_kernel(h, s, l, out):
    one = np.float32(1.0)
    for i in range(h.size):
        li = l[i]
        a = s[i] * min(li, one - li)
        h12 = (h[i] % one) * np.float32(12.0)
        for c in range(3):
            base = np.float32(0.0) if c == 0 else (np.float32(8.0) if c == 1
                                                   else np.float32(4.0))
            k = (base + h12) % np.float32(12.0)
            t = min(k - np.float32(3.0), np.float32(9.0) - k)
            t = min(max(t, -one), one)
            out[i, c] = li - a * t


def hsl_to_rgb(h: np.ndarray, s: np.ndarray, l: np.ndarray) -> np.ndarray:
    """Vectorized HSL -> RGB, h in [0,1] turns, s and l in [0,1]."""
    h = np.asarray(h, dtype=np.float32)
    s = np.asarray(s, dtype=np.float32)
    l = np.asarray(l, dtype=np.float32)
    shape = np.broadcast(h, s, l).shape
    if _HAVE_NUMBA:
        hf = np.broadcast_to(h, shape).ravel()
        sf = np.broadcast_to(s, shape).ravel()
        lf = np.broadcast_to(l, shape).ravel()
        out = np.empty((hf.size, 3), dtype=np.float32)
        _hsl_kernel(hf, sf, lf, out)
        return out.reshape(*shape, 3)
    a = s * np.minimum(l, np.float32(1.0) - l)
    h12 = (h % np.float32(1.0)) * np.float32(12.0)

    def channel(n: float) -> np.ndarray:
        k = (np.float32(n) + h12) % np.float32(12.0)
        t = np.minimum(k - np.float32(3.0), np.float32(9.0) - k)
        return l - a * np.clip(t, np.float32(-1.0), np.float32(1.0))

    return np.stack([channel(0.0), channel(8.0), channel(4.0)], axis=-1)


def _noise_field(kind: str, seed: int, freq: float, x, y,
                 octaves: int = 4, persistence: float = 0.5) -> np.ndarray:
    """Evaluate a named noise field and map it into [0, 1]."""
    if kind == "perlin":
        out = np.asarray(noise.perlin(seed, freq, x, y, octaves=octaves,
                                      persistence=persistence))
        out += np.float32(1.0)
        out *= np.float32(0.5)
        return out
    if kind == "cellular":
        out = np.asarray(noise.cellular(seed, freq, x, y))
        return np.clip(out, 0.0, 1.0, out=out)
    if kind == "white":
        return np.asarray(noise.white(seed, x, y))
    raise AugmentError(f"unknown noise kind {kind!r}")


@lru_cache(maxsize=8)
def _pixel_grid(h: int, w: int) -> tuple[np.ndarray, np.ndarray]:
    jj, ii = np.meshgrid(np.arange(h, dtype=np.float64),
                         np.arange(w, dtype=np.float64), indexing="ij")
    return ii, jj  # x = column, y = row


def texture_object(stack: ModalityStack, lightness_map: np.ndarray,
                   tex: TexturingParams) -> np.ndarray:
    """Color the foreground from noise-generated hue/saturation fields.

    hsl_merge samples the fields in image space; uv_texture indexes them
    through the 2D map obtained by dropping one normal axis, so the pattern
    follows the surface. Lightness comes from the shading map; background
    pixels stay zero.
    """
    h, w = stack.semantic.shape
    fg = stack.foreground
    l = lightness_map.mean(axis=2) if lightness_map.ndim == 3 else lightness_map
    if tex.mode == "uv_texture":
        keep = [c for c in range(3) if c != _AXIS_CHANNEL[tex.dropped_axis]]
        scale = float(max(h, w))
        x = (stack.normal[..., keep[0]].astype(np.float64) + 1.0) / 2.0 * scale
        y = (stack.normal[..., keep[1]].astype(np.float64) + 1.0) / 2.0 * scale
    elif tex.mode == "hsl_merge":
        x, y = _pixel_grid(h, w)
    else:
        raise AugmentError(f"unknown texturing mode {tex.mode!r}")
    hue = _noise_field(tex.hue_kind, tex.hue_seed, tex.hue_freq, x, y,
                       tex.octaves, tex.persistence)
    sat = _noise_field(tex.sat_kind, tex.sat_seed, tex.sat_freq, x, y,
                       tex.octaves, tex.persistence)
    rgb = hsl_to_rgb(hue, sat, l)
    rgb[~fg] = 0.0
    return rgb


# ---------------------------------------------------------------------------
# Stage 3: background
# ---------------------------------------------------------------------------

class PatchCorpus:
    """Directory of background images, addressed by a sorted-name index."""

    _EXTS = (".png", ".jpg", ".jpeg", ".bmp")

    def __init__(self, directory):
        self.directory = Path(directory)
        self.files = sorted(p for p in self.directory.iterdir()
                            if p.suffix.lower() in self._EXTS)
        self._cache: dict[int, np.ndarray] = {}

    def __len__(self) -> int:
        return len(self.files)

    def load(self, index: int) -> np.ndarray:
        from PIL import Image
        i = index % len(self.files)
        if i not in self._cache:
            with Image.open(self.files[i]) as img:
                arr = np.asarray(img.convert("RGB"), dtype=np.float32) / 255.0
            self._cache[i] = arr
        return self._cache[i]


def _crop_patch(img: np.ndarray, crop: tuple[float, float, float], flip: bool,
                out_hw: tuple[int, int]) -> np.ndarray:
    from PIL import Image
    ih, iw = img.shape[:2]
    side = max(8, int(round(crop[2] * min(ih, iw))))
    side = min(side, ih, iw)
    x0 = int(round(crop[0] * (iw - side)))
    y0 = int(round(crop[1] * (ih - side)))
    patch = img[y0:y0 + side, x0:x0 + side]
    if flip:
        patch = patch[:, ::-1]
    pil = Image.fromarray((patch * 255.0 + 0.5).astype(np.uint8))
    resized = pil.resize((out_hw[1], out_hw[0]), Image.BILINEAR)
    return np.asarray(resized, dtype=np.float32) / 255.0


def composite_background(rgb: np.ndarray, semantic: np.ndarray,
                         lightness_map: np.ndarray, bg: BackgroundParams,
                         patches: Optional[PatchCorpus] = None) -> np.ndarray:
    """Fill background pixels with a noise image or a cropped dataset patch.

    The background is multiplied by the normalized foreground brightness
    (mean of the shading lightness over foreground pixels) so clutter
    matches the scene illumination. Foreground pixels pass through.
    """
    h, w = semantic.shape
    fg = semantic != 0
    if fg.all():
        return rgb.copy()
    l = lightness_map.mean(axis=2) if lightness_map.ndim == 3 else lightness_map
    brightness = float(l[fg].mean()) if fg.any() else float(l.mean())
    if bg.source == "image_patch":
        if patches is None or len(patches) == 0:
            raise AugmentError(
                "image_patch background requested but the patch corpus is "
                "empty; rerun with the procedural background flag (bg=proc)")
        base = _crop_patch(patches.load(bg.patch_index), bg.crop, bg.flip, (h, w))
    elif bg.source == "procedural":
        x, y = _pixel_grid(h, w)
        chans = [_noise_field(bg.kinds[k], bg.seeds[k], bg.freqs[k], x, y)
                 for k in range(3)]
        base = hsl_to_rgb(chans[0], chans[1], chans[2])
    else:
        raise AugmentError(f"unknown background source {bg.source!r}")
    out = rgb.copy()
    out[~fg] = base[~fg] * np.float32(brightness)
    return out


# ---------------------------------------------------------------------------
# Stage 4: occlusion
# ---------------------------------------------------------------------------

def _angle_steps(occ: OcclusionParams, rng: np.random.Generator) -> np.ndarray:
    """Angular steps from U(2*pi/n - eps, 2*pi/n + eps), renormalized so
    they sum to exactly 2*pi."""
    base = 2.0 * math.pi / occ.n_vert
    steps = rng.uniform(base - occ.irregularity, base + occ.irregularity,
                        occ.n_vert)
    return steps * (2.0 * math.pi / steps.sum())


def random_polygon(occ: OcclusionParams) -> np.ndarray:
    """Occluder outline: random angular steps and radii around the center.

    Radii come from N(r_ave, sigma * r_ave). With eps = sigma = 0 this
    degenerates to the regular n-gon of radius r_ave (up to the random
    start angle).
    """
    n = occ.n_vert
    if n < 3:
        raise AugmentError("polygon needs at least 3 vertices")
    rng = np.random.default_rng(occ.shape_seed & 0xFFFFFFFFFFFFFFFF)
    steps = _angle_steps(occ, rng)
    theta0 = rng.uniform(0.0, 2.0 * math.pi)
    radii = rng.normal(occ.r_ave, occ.spikeyness * occ.r_ave, n)
    thetas = theta0 + np.concatenate([[0.0], np.cumsum(steps[:-1])])
    return np.stack([occ.cx + radii * np.cos(thetas),
                     occ.cy + radii * np.sin(thetas)], axis=1)


@_jit
def _polygon_mask_kernel(poly, mask):
    h, w = mask.shape
    n = poly.shape[0]
    for j in range(h):
        py = np.float64(j)
        for k in range(n):
            x1 = poly[k, 0]
            y1 = poly[k, 1]
            k2 = k + 1 if k + 1 < n else 0
            x2 = poly[k2, 0]
            y2 = poly[k2, 1]
            if y1 == y2 or (y1 > py) == (y2 > py):
                continue
            x_cross = (x2 - x1) * (py - y1) / (y2 - y1) + x1
            hi = min(int(np.ceil(x_cross)), w)  # pixels with px < x_cross
            for i in range(max(hi, 0)):
                mask[j, i] = not mask[j, i]


def polygon_mask(polygon: np.ndarray, shape: tuple[int, int]) -> np.ndarray:
    """Even-odd rasterization of a polygon over integer pixel coordinates."""
    h, w = shape
    polygon = np.ascontiguousarray(polygon, dtype=np.float64)
    if _HAVE_NUMBA:
        mask = np.zeros((h, w), dtype=np.bool_)
        _polygon_mask_kernel(polygon, mask)
        return mask
    px, py = _pixel_grid(h, w)
    mask = np.zeros((h, w), dtype=bool)
    n = len(polygon)
    for k in range(n):
        x1, y1 = polygon[k]
        x2, y2 = polygon[(k + 1) % n]
        if y1 == y2:
            continue
        straddles = (y1 > py) != (y2 > py)
        with np.errstate(divide="ignore", invalid="ignore"):
            x_cross = (x2 - x1) * (py - y1) / (y2 - y1) + x1
        mask ^= straddles & (px < x_cross)
    return mask


def apply_occlusion(rgb: np.ndarray, polygon: np.ndarray,
                    fill_seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Paint the polygon interior with per-pixel color noise.

    Returns the painted image and the occlusion mask, so ground-truth
    modalities can record the occluded area if desired.
    """
    h, w = rgb.shape[:2]
    mask = polygon_mask(polygon, (h, w))
    if not mask.any():
        return rgb, mask
    x, y = _pixel_grid(h, w)
    fill = np.stack([noise.white(noise.hash64(fill_seed, c), x, y)
                     for c in range(3)], axis=2).astype(np.float32)
    out = rgb.copy()
    out[mask] = fill[mask]
    return out, mask


# ---------------------------------------------------------------------------
# Stage 5: blur
# ---------------------------------------------------------------------------

def kernel_size_from_intensity(u: float) -> int:
    """Map intensity u in [0, 1] onto the odd kernel sizes 1, 3, 5, 7."""
    return 1 + 2 * min(int(3.0 * u), 3)


@_jit
def _quickselect_median(buf, n):
    """In-place selection of the middle order statistic of buf[:n]."""
    target = n // 2
    lo = 0
    hi = n - 1
    while hi - lo > 8:
        mid = (lo + hi) // 2
        # median-of-three pivot
        a, b, c = buf[lo], buf[mid], buf[hi]
        pivot = max(min(a, b), min(max(a, b), c))
        i = lo
        j = hi
        while i <= j:
            while buf[i] < pivot:
                i += 1
            while buf[j] > pivot:
                j -= 1
            if i <= j:
                buf[i], buf[j] = buf[j], buf[i]
                i += 1
                j -= 1
        if target <= j:
            hi = j
        elif target >= i:
            lo = i
        else:
            return buf[target]
    for a in range(lo + 1, hi + 1):  # insertion sort on the small remainder
        key = buf[a]
        b = a - 1
        while b >= lo and buf[b] > key:
            buf[b + 1] = buf[b]
            b -= 1
        buf[b + 1] = key
    return buf[target]


@_jit
def _median9(v0, v1, v2, v3, v4, v5, v6, v7, v8):
    """Median of 9 by the classic compare-exchange selection network."""
    # mnmx6(0,1,2,3,4,5)
    v0, v3 = min(v0, v3), max(v0, v3)
    v1, v4 = min(v1, v4), max(v1, v4)
    v2, v5 = min(v2, v5), max(v2, v5)
    v0, v1 = min(v0, v1), max(v0, v1)
    v0, v2 = min(v0, v2), max(v0, v2)
    v4, v5 = min(v4, v5), max(v4, v5)
    v3, v5 = min(v3, v5), max(v3, v5)
    # mnmx5(1,2,3,4,6)
    v1, v2 = min(v1, v2), max(v1, v2)
    v3, v4 = min(v3, v4), max(v3, v4)
    v1, v3 = min(v1, v3), max(v1, v3)
    v1, v6 = min(v1, v6), max(v1, v6)
    v4, v6 = min(v4, v6), max(v4, v6)
    v2, v6 = min(v2, v6), max(v2, v6)
    # mnmx4(2,3,4,7)
    v2, v3 = min(v2, v3), max(v2, v3)
    v4, v7 = min(v4, v7), max(v4, v7)
    v2, v4 = min(v2, v4), max(v2, v4)
    v3, v7 = min(v3, v7), max(v3, v7)
    # mnmx3(3,4,8)
    v4, v8 = min(v4, v8), max(v4, v8)
    v3, v8 = min(v3, v8), max(v3, v8)
    v3, v4 = min(v3, v4), max(v3, v4)
    return v4


@_jit
def _median_kernel(padded, size, out):
    """Median over size x size windows of an edge-padded image."""
    h, w, chans = out.shape
    if size == 3:
        for j in range(h):
            for i in range(w):
                for ch in range(chans):
                    out[j, i, ch] = _median9(
                        padded[j, i, ch], padded[j, i + 1, ch], padded[j, i + 2, ch],
                        padded[j + 1, i, ch], padded[j + 1, i + 1, ch], padded[j + 1, i + 2, ch],
                        padded[j + 2, i, ch], padded[j + 2, i + 1, ch], padded[j + 2, i + 2, ch])
        return
    buf = np.empty(size * size, dtype=out.dtype)
    for j in range(h):
        for i in range(w):
            for ch in range(chans):
                k = 0
                for dj in range(size):
                    for di in range(size):
                        buf[k] = padded[j + dj, i + di, ch]
                        k += 1
                if size == 5:
                    out[j, i, ch] = _median25(buf)
                elif size == 7:
                    out[j, i, ch] = _median49(buf)
                else:
                    out[j, i, ch] = _quickselect_median(buf, k)


def blur(rgb: np.ndarray, kind: str, size: int) -> np.ndarray:
    """Apply the chosen filter with edge-clamp padding; size 1 or kind
    'none' is the identity."""
    if size % 2 == 0:
        raise AugmentError(f"blur kernel size must be odd, got {size}")
    if kind == "none" or size == 1:
        return rgb.copy()
    if kind == "gaussian":
        sigma = 0.3 * ((size - 1) * 0.5 - 1) + 0.8
        truncate = ((size - 1) / 2) / sigma
        return ndi.gaussian_filter(rgb, sigma=(sigma, sigma, 0),
                                   truncate=truncate, mode="nearest")
    if kind == "uniform":
        return ndi.uniform_filter(rgb, size=(size, size, 1), mode="nearest")
    if kind == "median":
        if _HAVE_NUMBA:
            pad = size // 2
            padded = np.pad(rgb, ((pad, pad), (pad, pad), (0, 0)), mode="edge")
            out = np.empty_like(rgb)
            _median_kernel(padded, size, out)
            return out
        return ndi.median_filter(rgb, size=(size, size, 1), mode="nearest")
    raise AugmentError(f"unknown blur kind {kind!r}")


# ---------------------------------------------------------------------------
# Full pipeline
# ---------------------------------------------------------------------------

def augment(stack: ModalityStack, z: NoiseVector,
            patches: Optional[PatchCorpus] = None,
            focal: Optional[float] = None,
            seed: Optional[int] = None) -> AugmentedSample:
    """Run the five-stage pipeline on one clean stack.

    `focal` should be the focal length the stack was rendered with (it
    shapes the specular viewer vectors); it defaults to the image side
    length, a moderate field of view, when the caller has no intrinsics.
    The returned image is rescaled to [-1, 1]; the pre-texturing lightness
    map rides along as ground truth for lightness regression.
    """
    h, w = stack.semantic.shape
    if focal is None:
        focal = float(max(h, w))
    m = shade(stack.normal, z.lighting, focal)
    lightness = m.mean(axis=2)
    rgb = texture_object(stack, lightness, z.texturing)
    rgb = composite_background(rgb, stack.semantic, lightness, z.background, patches)
    if z.occlusion.enabled:
        poly = random_polygon(z.occlusion)
        rgb, _ = apply_occlusion(rgb, poly, z.occlusion.fill_seed)
    rgb = blur(rgb, z.blur.kind, kernel_size_from_intensity(z.blur.intensity))
    rgb = (np.clip(rgb, 0.0, 1.0) * 2.0 - 1.0).astype(np.float32)
    return AugmentedSample(rgb=rgb,
                           lightness=lightness.astype(np.float32),
                           class_id=stack.class_id,
                           pose=stack.pose,
                           noise_vector=z,
                           seed=seed)
