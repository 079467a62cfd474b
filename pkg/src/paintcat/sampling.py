"""Seeded random paint data for ensembles and law checks."""

from __future__ import annotations

import zlib
from typing import Sequence

import numpy as np

from .canvas import PaintState
from .color_texture import LOAD_MAX, Color, Texture

LOAD_LEVELS = (0, 64, 128, 192, 256)
TEXTURES = tuple(Texture.paintable())


def stream(seed: int, *labels: str | int) -> np.random.Generator:
    """
    An independent generator keyed by ``seed`` and a tuple of labels.

    Keyed streams let separate checks (or separate instances of one check)
    draw numbers without perturbing each other.
    """
    key = [int(seed) & 0xFFFFFFFFFFFFFFFF]
    for label in labels:
        if isinstance(label, str):
            key.append(zlib.crc32(label.encode("utf-8")))
        else:
            key.append(int(label))
    return np.random.default_rng(np.random.SeedSequence(key))


def random_color(rng: np.random.Generator) -> Color:
    # 8-bit levels scaled to 16 bits
    r, g, b = (int(v) * 257 for v in rng.integers(0, 256, size=3))
    return Color(r, g, b)


def random_load(rng: np.random.Generator) -> int:
    if rng.random() < 0.5:
        return LOAD_LEVELS[int(rng.integers(len(LOAD_LEVELS)))]
    return int(rng.integers(0, LOAD_MAX + 1))


def random_texture(rng: np.random.Generator) -> Texture:
    return TEXTURES[int(rng.integers(len(TEXTURES)))]


def random_state(rng: np.random.Generator, region: str) -> PaintState:
    return PaintState(region, random_color(rng), random_texture(rng), random_load(rng))


def random_regions(rng: np.random.Generator, pool: Sequence[str], n: int) -> list[str]:
    """Region names for ``n`` factors, re-using an earlier one half of the time."""
    chosen: list[str] = []
    for _ in range(n):
        if chosen and rng.random() < 0.5:
            chosen.append(chosen[int(rng.integers(len(chosen)))])
        else:
            chosen.append(pool[int(rng.integers(len(pool)))])
    return chosen


def random_states(rng: np.random.Generator, regions: Sequence[str]) -> tuple[PaintState, ...]:
    return tuple(random_state(rng, region) for region in regions)
