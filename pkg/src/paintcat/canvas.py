"""
Regions, paint states and the evaluation of tensor words into canvases.

A word is folded left to right: the first stroke landing in a region covers
the bare canvas, every later one is layered over what is already there.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import Callable, Iterable, Iterator, Mapping

from .color_texture import Color, RegionPaint, Texture, check_load, layer

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class RegionError(ValueError):
    """Unknown, duplicate or overlapping region."""


@dataclass(frozen=True)
class Region:
    name: str
    x: int
    y: int
    width: int
    height: int

    def __post_init__(self):
        if not _NAME_RE.fullmatch(self.name):
            raise RegionError(f"invalid region name {self.name!r}")
        for field in ("x", "y", "width", "height"):
            if getattr(self, field) < 0:
                raise RegionError(f"region {self.name}: {field} must be non-negative")
        if self.width < 1 or self.height < 1:
            raise RegionError(f"region {self.name}: width and height must be at least 1")

    def overlaps(self, other: Region) -> bool:
        return (self.x < other.x + other.width and other.x < self.x + self.width
                and self.y < other.y + other.height and other.y < self.y + self.height)

    def contains(self, px: int, py: int) -> bool:
        return self.x <= px < self.x + self.width and self.y <= py < self.y + self.height


class RegionRegistry(Mapping[str, Region]):
    """Named, pairwise non-overlapping rectangles making up a canvas."""

    def __init__(self, regions: Iterable[Region] = ()):
        self._regions: dict[str, Region] = {}
        for region in regions:
            self.register(region)

    def register(self, region: Region) -> Region:
        if region.name in self._regions:
            raise RegionError(f"region {region.name} already declared")
        for other in self._regions.values():
            if region.overlaps(other):
                raise RegionError(f"region {region.name} overlaps region {other.name}")
        self._regions[region.name] = region
        return region

    def __getitem__(self, name: str) -> Region:
        try:
            return self._regions[name]
        except KeyError:
            raise RegionError(f"unknown region {name!r}") from None

    def __iter__(self) -> Iterator[str]:
        return iter(self._regions)

    def __len__(self) -> int:
        return len(self._regions)

    def __repr__(self):
        return f"RegionRegistry({list(self._regions.values())!r})"

    def extent(self) -> tuple[int, int]:
        """Smallest (width, height) holding every region; (1, 1) when empty."""
        width = max((r.x + r.width for r in self._regions.values()), default=1)
        height = max((r.y + r.height for r in self._regions.values()), default=1)
        return width, height


@dataclass(frozen=True)
class PaintState:
    """A (colour, texture) applied to one region with a given pigment load."""

    region: str
    color: Color
    texture: Texture
    load: int

    def __post_init__(self):
        if not isinstance(self.texture, Texture):
            object.__setattr__(self, "texture", Texture.parse(self.texture))
        if self.texture is Texture.BLANK:
            raise ValueError("a paint state cannot have the blank texture")
        check_load(self.load)

    def __str__(self):
        return f"({self.color.to_hex()}, {self.texture}, load {self.load})_{self.region}"

    def to_json(self) -> dict:
        return {"region": self.region, "color": self.color.to_hex(),
                "texture": self.texture.value, "load": self.load}


class CanvasState(Mapping[str, RegionPaint]):
    """Immutable map region name -> RegionPaint. Absent regions are blank."""

    __slots__ = ("_paint",)

    def __init__(self, paint: Mapping[str, RegionPaint] | None = None):
        self._paint = MappingProxyType(dict(sorted((paint or {}).items())))

    def __getitem__(self, region: str) -> RegionPaint:
        return self._paint[region]

    def __iter__(self) -> Iterator[str]:
        return iter(self._paint)

    def __len__(self) -> int:
        return len(self._paint)

    def __eq__(self, other):
        if not isinstance(other, CanvasState):
            return NotImplemented
        return dict(self._paint) == dict(other._paint)

    def __hash__(self):
        return hash(tuple(self._paint.items()))

    def __repr__(self):
        inner = ", ".join(f"{k}: ({v.color!r}, {v.texture})" for k, v in self._paint.items())
        return f"CanvasState({{{inner}}})"

    def to_json(self) -> dict:
        return {name: {"color": paint.color.to_hex(), "texture": paint.texture.value}
                for name, paint in self._paint.items()}

    def dumps(self) -> str:
        """Canonical JSON text: keys sorted, no insignificant whitespace."""
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


Kernel = Callable[[RegionPaint, PaintState], RegionPaint]


def blank() -> CanvasState:
    return CanvasState()


def eval_word(word: Iterable[PaintState], regions: Mapping[str, Region] | None = None,
              kernel: Kernel = layer) -> CanvasState:
    """
    Evaluate a sequence of paint states into the canvas it paints.

    ``regions``, when given, is checked for every factor's region. ``kernel``
    is the layering rule and exists so tests can substitute a broken one.
    """
    paint: dict[str, RegionPaint] = {}
    for state in word:
        if regions is not None and state.region not in regions:
            raise RegionError(f"unknown region {state.region!r}")
        below = paint.get(state.region)
        if below is None:
            paint[state.region] = RegionPaint(state.color, state.texture)
        else:
            paint[state.region] = kernel(below, state)
    return CanvasState(paint)


def canvas_equal(a: CanvasState, b: CanvasState) -> bool:
    return a == b
