import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from paintcat.canvas import PaintState
from paintcat.color_texture import (
    BLUE,
    RED,
    Color,
    RegionPaint,
    Texture,
    check_load,
    color_distance,
    layer,
    mix_channel,
)

from conftest import exact_mix

channels = st.integers(0, 65535)
loads = st.integers(0, 256)
colors = st.builds(Color, channels, channels, channels)
textures = st.sampled_from(Texture.paintable())


@pytest.mark.parametrize("bottom, top, load, expected", [
    (0, 65535, 128, 32768),
    (65535, 0, 200, 14336),
    (0, 65535, 200, 51199),
    (1234, 4321, 0, 1234),
    (1234, 4321, 256, 4321),
])
def test_mix_channel_worked_values(bottom, top, load, expected):
    assert exact_mix(bottom, top, load) == expected
    assert mix_channel(bottom, top, load) == expected


@given(channels, channels, loads)
def test_mix_channel_matches_rational_oracle(bottom, top, load):
    assert mix_channel(bottom, top, load) == exact_mix(bottom, top, load)


@given(channels, channels, loads)
def test_mix_channel_stays_in_range(bottom, top, load):
    assert 0 <= mix_channel(bottom, top, load) <= 65535


@given(channels, loads)
def test_mix_channel_idempotent(c, load):
    assert mix_channel(c, c, load) == c


def test_mix_channel_vectorised():
    b = np.arange(0, 65536, 257, dtype=np.int64)
    out = mix_channel(b[:, None], b[None, :], 128)
    assert out.shape == (256, 256)
    assert out[0, 255] == 32768


def test_color_rejects_out_of_range():
    with pytest.raises(ValueError):
        Color(65536, 0, 0)
    with pytest.raises(ValueError):
        Color(-1, 0, 0)
    with pytest.raises(TypeError):
        Color(1.5, 0, 0)


def test_hex_roundtrip():
    assert Color.from_hex("#CC2222") == Color(0xCC * 257, 0x22 * 257, 0x22 * 257)
    assert Color.from_hex("#FFFF00008000") == Color(65535, 0, 0x8000)
    assert Color(32768, 0, 32768).to_hex() == "#800000008000"
    assert Color.from_hex("#cc2222").to_short_hex() == "#CC2222"
    assert Color(32768, 0, 0).to_short_hex() is None
    with pytest.raises(ValueError):
        Color.from_hex("#12345")


@given(colors)
def test_hex_long_form_is_lossless(c):
    assert Color.from_hex(c.to_hex()) == c


def test_load_bounds():
    assert check_load(0) == 0 and check_load(256) == 256
    for bad in (-1, 257):
        with pytest.raises(ValueError):
            check_load(bad)


def test_layer_purple():
    base = RegionPaint(RED, Texture.SMOOTH)
    top = PaintState("R1", BLUE, Texture.TRANSPARENT, 128)
    assert layer(base, top) == RegionPaint(Color(32768, 0, 32768), Texture.TRANSPARENT)


def test_layer_full_load_replaces():
    base = RegionPaint(RED, Texture.SMOOTH)
    top = PaintState("R1", BLUE, Texture.IMPASTO, 256)
    assert layer(base, top) == RegionPaint(BLUE, Texture.IMPASTO)


def test_layer_light_load_keeps_texture():
    base = RegionPaint(RED, Texture.SMOOTH)
    top = PaintState("R1", BLUE, Texture.IMPASTO, 127)
    assert layer(base, top).texture is Texture.SMOOTH


@given(colors, textures, loads)
def test_layer_idempotent(c, t, load):
    base = RegionPaint(c, t)
    assert layer(base, PaintState("R1", c, t, load)) == base


@given(colors, colors, textures, textures)
def test_boundary_loads(bottom, top, tb, tt):
    base = RegionPaint(bottom, tb)
    assert layer(base, PaintState("R1", top, tt, 0)).color == bottom
    assert layer(base, PaintState("R1", top, tt, 256)).color == top


def test_region_paint_rejects_blank():
    with pytest.raises(ValueError):
        RegionPaint(RED, Texture.BLANK)


def test_color_distance_examples():
    assert color_distance(RED, RED) == 0
    assert color_distance(RED, BLUE) == 65535
    assert color_distance(Color(32768, 0, 32768), Color(32768, 0, 32768)) == 0


def test_color_distance_is_a_metric_on_subgrid():
    levels = (0, 1, 32768, 65535)
    grid = [Color(*c) for c in itertools.product(levels, repeat=3)]
    for a in grid:
        assert color_distance(a, a) == 0
        for b in grid:
            d = color_distance(a, b)
            assert d == color_distance(b, a)
            assert (d == 0) == (a == b)
            for c in grid:
                assert color_distance(a, c) <= d + color_distance(b, c)
