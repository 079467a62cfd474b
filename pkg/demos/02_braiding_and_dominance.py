"""
Braids and order dominance
==========================

A braid swaps two neighbouring factors of a word. On disjoint regions the
swap is invisible after evaluation. On a shared region the later stroke
lands on top, and the dominance check measures how much that matters.
"""

from paintcat import PaintState, TensorWord, Texture, braid, check_dominance, eval_word
from paintcat.color_texture import BLUE, RED

a = PaintState("R1", RED, Texture.SMOOTH, 200)
b = PaintState("R1", BLUE, Texture.SMOOTH, 200)
c = PaintState("R2", BLUE, Texture.STIPPLED, 90)

# braiding twice is the identity on the word itself
w = TensorWord([a, c])
swap = braid(w, 0)
print(swap.sexpr())
assert swap.target == TensorWord([c, a])
assert (swap >> braid(swap.target, 0))(w) == tuple(w)

# different regions commute after evaluation
assert eval_word([a, c]) == eval_word([c, a])

# the same region does not: red then blue is not blue then red
report = check_dominance(a, b)
print("red/blue at load 200:", report.distance)
print("  forward ", report.forward["R1"].color.to_hex())
print("  backward", report.backward["R1"].color.to_hex())

# at load 128 the top coat only wins the texture; colours meet halfway
half_a = PaintState("R1", RED, Texture.SMOOTH, 128)
half_b = PaintState("R1", BLUE, Texture.IMPASTO, 128)
print("load 128:", check_dominance(half_a, half_b).distance)
