"""
Exact colour, texture and pigment-load arithmetic.

Colours are 16-bit-per-channel linear intensities stored as plain integers,
so every layering result is bit-exact and reproducible on any platform.

>>> mix_channel(0, 65535, 128)
32768
>>> mix_color(Color(65535, 0, 0), Color(0, 0, 65535), 128)
Color(32768, 0, 32768)
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

CHANNEL_MAX = 65535
LOAD_MAX = 256
TEXTURE_TAKEOVER = 128

_HEX_RE = re.compile(r"#?([0-9A-Fa-f]{6}|[0-9A-Fa-f]{12})")


class Texture(str, enum.Enum):
    SMOOTH = "smooth"
    STIPPLED = "stippled"
    IMPASTO = "impasto"
    TRANSPARENT = "transparent"
    BLANK = "blank"

    def __str__(self):
        return self.value

    @classmethod
    def paintable(cls):
        """Textures a stroke may carry (everything except ``blank``)."""
        return [t for t in cls if t is not cls.BLANK]

    @classmethod
    def parse(cls, name: str) -> Texture:
        try:
            return cls(name)
        except ValueError:
            raise ValueError(f"unknown texture {name!r}") from None


@dataclass(frozen=True, order=True)
class Color:
    r: int
    g: int
    b: int

    def __post_init__(self):
        for name in ("r", "g", "b"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"channel {name} must be an int, got {value!r}")
            if not 0 <= value <= CHANNEL_MAX:
                raise ValueError(f"channel {name}={value} outside [0, {CHANNEL_MAX}]")

    def __repr__(self):
        return f"Color({self.r}, {self.g}, {self.b})"

    @property
    def channels(self) -> tuple[int, int, int]:
        return (self.r, self.g, self.b)

    @classmethod
    def from_hex(cls, text: str) -> Color:
        """
        Parse ``#RRGGBB`` (8-bit, scaled by 257) or ``#RRRRGGGGBBBB``.

        >>> Color.from_hex("#FF0080")
        Color(65535, 0, 32896)
        """
        match = _HEX_RE.fullmatch(text)
        if match is None:
            raise ValueError(f"not a hex colour: {text!r}")
        digits = match.group(1)
        if len(digits) == 6:
            return cls(*(int(digits[i:i + 2], 16) * 257 for i in (0, 2, 4)))
        return cls(*(int(digits[i:i + 4], 16) for i in (0, 4, 8)))

    def to_hex(self) -> str:
        """Lossless ``#RRRRGGGGBBBB`` form."""
        return "#" + "".join(f"{c:04X}" for c in self.channels)

    def to_short_hex(self) -> str | None:
        """``#RRGGBB`` when every channel is an exact 8-bit level, else None."""
        if any(c % 257 for c in self.channels):
            return None
        return "#" + "".join(f"{c // 257:02X}" for c in self.channels)


def check_load(load: int) -> int:
    if isinstance(load, bool) or not isinstance(load, int):
        raise TypeError(f"load must be an int, got {load!r}")
    if not 0 <= load <= LOAD_MAX:
        raise ValueError(f"load {load} outside [0, {LOAD_MAX}]")
    return load


@dataclass(frozen=True)
class RegionPaint:
    """The resolved appearance of one region after all layering."""

    color: Color
    texture: Texture

    def __post_init__(self):
        if self.texture is Texture.BLANK:
            raise ValueError("a painted region cannot have the blank texture")


def mix_channel(bottom, top, load):
    """
    Weighted over-operator on one channel, rounded half up.

    Works on Python ints and elementwise on integer numpy arrays (use a
    dtype of at least 64 bits; the intermediate needs 25 bits).
    """
    return (bottom * (LOAD_MAX - load) + top * load + 128) // LOAD_MAX


def mix_color(bottom: Color, top: Color, load: int) -> Color:
    return Color(*(mix_channel(b, t, load) for b, t in zip(bottom.channels, top.channels)))


def layer(bottom: RegionPaint, top) -> RegionPaint:
    """
    Paint ``top`` (anything with ``color``, ``texture`` and ``load``, normally
    a PaintState) over ``bottom``. The stroke's texture wins only when its
    load reaches the takeover threshold.
    """
    mixed = mix_color(bottom.color, top.color, top.load)
    texture = top.texture if top.load >= TEXTURE_TAKEOVER else bottom.texture
    return RegionPaint(mixed, texture)


def color_distance(a: Color, b: Color) -> int:
    """Chebyshev distance between two colours."""
    return max(abs(x - y) for x, y in zip(a.channels, b.channels))


RED = Color(65535, 0, 0)
BLUE = Color(0, 0, 65535)
YELLOW = Color(65535, 65535, 0)
BLACK = Color(0, 0, 0)
WHITE = Color(65535, 65535, 65535)
