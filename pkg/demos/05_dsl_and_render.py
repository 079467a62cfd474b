"""
Scripts and pictures
====================

The paint language binds regions, states, words and strokes, and can
check laws and render the final canvas as a PPM image.
"""

from pathlib import Path

import numpy as np

from paintcat.dsl import Environment, parse, pretty_print, run_source

source = (Path(__file__).parent / "quickstart.paint").read_text()
script = parse(source)
print(pretty_print(script), end="")
assert parse(pretty_print(script)) == script

result = run_source(source, Environment(write_files=False))
print(result.stdout, end="")

image = result.renders[0].image
print("image", image.width, "x", image.height)
colours, counts = np.unique(image.pixels.reshape(-1, 3), axis=0, return_counts=True)
for rgb, n in zip(colours.tolist(), counts.tolist()):
    print(f"  {rgb} x {n}")
