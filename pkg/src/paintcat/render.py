"""
Rasterise canvases to 8-bit RGB images and binary PPM (P6).

Texture patterns are pure functions of absolute pixel coordinates, so a
render never depends on anything but the canvas and the region geometry.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

import numpy as np

from .canvas import CanvasState, Region, RegionError
from .color_texture import Texture

GROUND = (255, 255, 255)
STIPPLE_DARKEN = 48
IMPASTO_DARKEN = 32


@dataclass(frozen=True, eq=False)
class Image:
    """Row-major ``(height, width, 3)`` uint8 pixels."""

    pixels: np.ndarray

    def __post_init__(self):
        if self.pixels.ndim != 3 or self.pixels.shape[2] != 3 or self.pixels.dtype != np.uint8:
            raise ValueError("pixels must be a (height, width, 3) uint8 array")
        if self.pixels.shape[0] < 1 or self.pixels.shape[1] < 1:
            raise ValueError("image must be at least 1x1")

    @classmethod
    def filled(cls, width: int, height: int, rgb=GROUND) -> Image:
        pixels = np.empty((height, width, 3), dtype=np.uint8)
        pixels[...] = rgb
        return cls(pixels)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def __eq__(self, other):
        if not isinstance(other, Image):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)


def to_8bit(channel):
    """16-bit -> 8-bit, rounding to the nearest level."""
    return np.minimum((np.asarray(channel, dtype=np.int64) + 128) // 257, 255)


def texture_pattern(texture: Texture, x, y, base):
    """
    Modulate an 8-bit ``base`` colour at pixel ``(x, y)``.

    ``x``/``y`` may be arrays (broadcast against the trailing channel axis of
    ``base``). Returns an int64 array.

    >>> texture_pattern(Texture.STIPPLED, 0, 0, (200, 200, 200)).tolist()
    [152, 152, 152]
    >>> texture_pattern(Texture.TRANSPARENT, 3, 5, (0, 0, 0)).tolist()
    [127, 127, 127]
    """
    base = np.asarray(base, dtype=np.int64)
    x = np.asarray(x)[..., None]
    y = np.asarray(y)[..., None]
    if texture is Texture.SMOOTH:
        return np.broadcast_to(base, np.broadcast_shapes(base.shape, x.shape)).copy()
    if texture is Texture.STIPPLED:
        hit = (x + 2 * y) % 4 == 0
        return np.where(hit, np.maximum(base - STIPPLE_DARKEN, 0), base)
    if texture is Texture.IMPASTO:
        ridge = (x + y) % 6 < 2
        return np.where(ridge, np.maximum(base - IMPASTO_DARKEN, 0), base)
    if texture is Texture.TRANSPARENT:
        lifted = base + (255 - base) // 2
        return np.broadcast_to(lifted, np.broadcast_shapes(base.shape, x.shape)).copy()
    raise ValueError(f"cannot render texture {texture}")


def rasterize(canvas: CanvasState, regions: Mapping[str, Region], width: int, height: int) -> Image:
    """Paint every region of ``canvas`` into a white ``width`` x ``height`` image."""
    if width < 1 or height < 1:
        raise ValueError("image size must be at least 1x1")
    for region in regions.values():
        if region.x + region.width > width or region.y + region.height > height:
            raise RegionError(f"region {region.name} does not fit in a {width}x{height} image")
    image = Image.filled(width, height)
    for name, paint in canvas.items():
        if name not in regions:
            raise RegionError(f"unknown region {name!r}")
        r = regions[name]
        ys, xs = np.mgrid[r.y:r.y + r.height, r.x:r.x + r.width]
        base = to_8bit(paint.color.channels)
        image.pixels[r.y:r.y + r.height, r.x:r.x + r.width] = texture_pattern(
            paint.texture, xs, ys, base)
    return image


def write_ppm(image: Image) -> bytes:
    header = f"P6\n{image.width} {image.height}\n255\n".encode("ascii")
    return header + np.ascontiguousarray(image.pixels).tobytes()


def read_ppm(data: bytes) -> Image:
    """Inverse of :func:`write_ppm` for the exact header layout it produces."""
    magic, dims, maxval, body = data.split(b"\n", 3)
    if magic != b"P6" or maxval != b"255":
        raise ValueError("not a P6 PPM with maxval 255")
    width, height = map(int, dims.split())
    pixels = np.frombuffer(body, dtype=np.uint8).reshape(height, width, 3)
    return Image(pixels.copy())


def save_ppm(image: Image, path) -> Path:
    path = Path(path)
    path.write_bytes(write_ppm(image))
    return path
