"""
paintcat: the category Paint, executable.

Objects are tensor words of paint states, morphisms are brushstrokes and
braids, and a law checker verifies the strict braided monoidal structure.
"""

from .canvas import CanvasState, PaintState, Region, RegionError, RegionRegistry, blank, canvas_equal, eval_word
from .category import (
    AddColor,
    BoundaryError,
    DoNothing,
    Morphism,
    PositionError,
    ScaleLoad,
    SetColor,
    SetTexture,
    TensorWord,
    TestEnsemble,
    braid,
    braiding,
    compose,
    id_morphism,
    morphism_equal,
    stroke_morphism,
    tensor_morphisms,
    tensor_words,
    unit_word,
)
from .color_texture import Color, RegionPaint, Texture, color_distance, layer, mix_channel
from .laws import LawCheckConfig, LawReport, check_dominance, run_all
from .render import Image, rasterize, texture_pattern, write_ppm

__version__ = "0.1.0"
