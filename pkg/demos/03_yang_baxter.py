"""
The braid relation on three strands
===================================

Both Yang-Baxter composites reverse a three-factor word. Here every
permutation of a fixed triple is pushed through both sides and compared
with the plain reversal.
"""

import itertools

from paintcat import Color, PaintState, Texture, eval_word, morphism_equal
from paintcat.laws import yang_baxter_sides

x = PaintState("R1", Color.from_hex("#FF0000"), Texture.SMOOTH, 200)
y = PaintState("R1", Color.from_hex("#0000FF"), Texture.TRANSPARENT, 128)
z = PaintState("R1", Color.from_hex("#22CC55"), Texture.IMPASTO, 64)

lhs, rhs = yang_baxter_sides(x, y, z)
print("lhs:", lhs.sexpr())
print("rhs:", rhs.sexpr())

for perm in itertools.permutations((x, y, z)):
    assert lhs(perm) == rhs(perm) == perm[::-1]
print("all 6 permutations reversed by both sides")

# extensional equality over the sampled ensemble agrees
assert morphism_equal(lhs, rhs)

# the braid is a pure rearrangement, yet order still shows on the canvas
print(eval_word([x, y, z])["R1"].color.to_hex(), eval_word([z, y, x])["R1"].color.to_hex())
