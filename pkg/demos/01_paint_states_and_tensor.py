"""
Paint states, words and the canvas
==================================

A paint state is one brushstroke waiting to happen: a region, a colour, a
texture and a load between 0 and 256. Words of states are the objects of
the category, and evaluating a word layers its strokes left to right.
"""

import numpy as np

from paintcat import Color, PaintState, TensorWord, Texture, eval_word, mix_channel

# colours are 16 bits per channel; hex literals may use 6 or 12 digits
red = Color.from_hex("#CC2222")
blue = Color.from_hex("#2233CC")
print(red.to_hex(), blue.to_hex())

s1 = PaintState("R1", red, Texture.SMOOTH, 200)
s2 = PaintState("R1", blue, Texture.TRANSPARENT, 128)
s3 = PaintState("R2", Color.from_hex("#22CC55"), Texture.IMPASTO, 256)

# the tensor product of words is concatenation, with the empty word as unit
w = TensorWord([s1]) @ TensorWord([s2]) @ TensorWord([s3])
print(len(w), w.signature)
assert TensorWord([]) @ w == w == w @ TensorWord([])

# each region keeps its own paint; absent regions stay blank
canvas = eval_word(w)
for name, paint in canvas.items():
    print(name, paint.color.to_hex(), paint.texture.value)

# the mixing kernel is integer arithmetic, so it vectorizes cleanly
loads = np.arange(0, 257, 32)
print(mix_channel(0, 65535, loads))

# painting the same state twice changes nothing
assert eval_word([s1, s1]) == eval_word([s1])
