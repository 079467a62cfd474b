"""
The category Paint.

Objects are tensor words, finite sequences of paint states, with tensor as
concatenation and the empty word as unit, so the monoidal structure is strict
by construction. Morphisms are trees built from identities, single-position
strokes and adjacent braids; a tree denotes a function on word states (tuples
of paint states with the source's region signature).

>>> from paintcat.color_texture import RED, YELLOW, Texture
>>> a = PaintState("R1", RED, Texture.SMOOTH, 200)
>>> w = TensorWord([a])
>>> add_yellow = stroke_morphism(w, 0, AddColor(YELLOW, 128))
>>> add_yellow.target[0].color
Color(65535, 32768, 0)
>>> stipple = stroke_morphism(add_yellow.target, 0, SetTexture(Texture.STIPPLED))
>>> print((add_yellow >> stipple).sexpr())
(comp (stroke 0 (set_texture stippled)) (stroke 0 (add_color #FFFFFFFF0000 128)))
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from .canvas import PaintState
from .color_texture import BLACK, LOAD_MAX, WHITE, Color, Texture, check_load, mix_color
from . import sampling


class BoundaryError(ValueError):
    """Composition of morphisms whose endpoints do not match."""


class PositionError(IndexError):
    """A stroke or braid position outside the word."""


class SignatureError(ValueError):
    """A word state whose arity or regions do not fit the morphism's source."""


# objects


@dataclass(frozen=True)
class TensorWord:
    factors: tuple[PaintState, ...] = ()

    def __post_init__(self):
        factors = tuple(self.factors)
        for factor in factors:
            if not isinstance(factor, PaintState):
                raise TypeError(f"tensor factors must be PaintState, got {factor!r}")
        object.__setattr__(self, "factors", factors)

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __getitem__(self, index):
        return self.factors[index]

    def __matmul__(self, other: TensorWord) -> TensorWord:
        return tensor_words(self, other)

    def __repr__(self):
        return "TensorWord([" + ", ".join(map(str, self.factors)) + "])"

    @property
    def signature(self) -> tuple[str, ...]:
        return tuple(f.region for f in self.factors)

    def to_json(self) -> list:
        return [f.to_json() for f in self.factors]


def tensor_words(w1: TensorWord, w2: TensorWord) -> TensorWord:
    return TensorWord(w1.factors + w2.factors)


def unit_word() -> TensorWord:
    return TensorWord()


# stroke generators


class StrokeGen:
    """A brushstroke acting on one paint state, never changing its region."""

    def __call__(self, state: PaintState) -> PaintState:
        raise NotImplementedError

    def sexpr(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class SetColor(StrokeGen):
    color: Color

    def __call__(self, state):
        return replace(state, color=self.color)

    def sexpr(self):
        return f"(set_color {self.color.to_hex()})"


@dataclass(frozen=True)
class AddColor(StrokeGen):
    """Mix ``color`` into the state's colour with weight ``load``."""

    color: Color
    load: int

    def __post_init__(self):
        check_load(self.load)

    def __call__(self, state):
        return replace(state, color=mix_color(state.color, self.color, self.load))

    def sexpr(self):
        return f"(add_color {self.color.to_hex()} {self.load})"


@dataclass(frozen=True)
class SetTexture(StrokeGen):
    texture: Texture

    def __post_init__(self):
        texture = Texture.parse(self.texture) if isinstance(self.texture, str) else self.texture
        if texture is Texture.BLANK:
            raise ValueError("cannot stroke the blank texture")
        object.__setattr__(self, "texture", texture)

    def __call__(self, state):
        return replace(state, texture=self.texture)

    def sexpr(self):
        return f"(set_texture {self.texture})"


@dataclass(frozen=True)
class ScaleLoad(StrokeGen):
    """Multiply the load by ``numerator/denominator``, floor, clamp to [0, 256]."""

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("scale_load denominator must be positive")
        ratio = Fraction(self.numerator, self.denominator)
        object.__setattr__(self, "numerator", ratio.numerator)
        object.__setattr__(self, "denominator", ratio.denominator)

    def __call__(self, state):
        scaled = state.load * self.numerator // self.denominator
        return replace(state, load=min(max(scaled, 0), LOAD_MAX))

    def sexpr(self):
        return f"(scale_load {self.numerator}/{self.denominator})"


@dataclass(frozen=True)
class DoNothing(StrokeGen):
    def __call__(self, state):
        return state

    def sexpr(self):
        return "(do_nothing)"


# morphism trees


class Node:
    arity: int

    def apply(self, states: tuple[PaintState, ...]) -> tuple[PaintState, ...]:
        raise NotImplementedError

    def sexpr(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Identity(Node):
    arity: int

    def apply(self, states):
        return states

    def sexpr(self):
        return f"(id {self.arity})"


@dataclass(frozen=True)
class Stroke(Node):
    position: int
    gen: StrokeGen
    arity: int

    def apply(self, states):
        i = self.position
        return states[:i] + (self.gen(states[i]),) + states[i + 1:]

    def sexpr(self):
        return f"(stroke {self.position} {self.gen.sexpr()})"


@dataclass(frozen=True)
class Braid(Node):
    position: int
    arity: int

    def apply(self, states):
        i = self.position
        return states[:i] + (states[i + 1], states[i]) + states[i + 2:]

    def sexpr(self):
        return f"(braid {self.position})"


@dataclass(frozen=True)
class Comp(Node):
    """``second`` after ``first``."""

    second: Node
    first: Node
    arity: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "arity", self.first.arity)

    def apply(self, states):
        return self.second.apply(self.first.apply(states))

    def sexpr(self):
        return f"(comp {self.second.sexpr()} {self.first.sexpr()})"


@dataclass(frozen=True)
class Tensor(Node):
    left: Node
    right: Node
    arity: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "arity", self.left.arity + self.right.arity)

    def apply(self, states):
        k = self.left.arity
        return self.left.apply(states[:k]) + self.right.apply(states[k:])

    def sexpr(self):
        return f"(tensor {self.left.sexpr()} {self.right.sexpr()})"


@dataclass(frozen=True, eq=False)
class Morphism:
    """
    An arrow of Paint. Build with the module functions rather than directly;
    the constructor only checks that the tree carries source onto target.

    Equality of morphisms is extensional, see :func:`morphism_equal`.
    """

    source: TensorWord
    target: TensorWord
    tree: Node

    def __post_init__(self):
        if self.tree.arity != len(self.source):
            raise SignatureError(f"tree arity {self.tree.arity} != source length {len(self.source)}")
        if self.tree.apply(self.source.factors) != self.target.factors:
            raise ValueError("morphism tree does not carry source onto target")

    @classmethod
    def from_tree(cls, source: TensorWord, tree: Node) -> Morphism:
        return cls(source, TensorWord(tree.apply(source.factors)), tree)

    def __call__(self, states: Sequence[PaintState]) -> tuple[PaintState, ...]:
        """The denotation: act on any word state with the source's region signature."""
        states = tuple(states)
        signature = tuple(s.region for s in states)
        if signature != self.source.signature:
            raise SignatureError(f"word state regions {signature} do not match "
                                 f"source signature {self.source.signature}")
        return self.tree.apply(states)

    def __rshift__(self, other: Morphism) -> Morphism:
        """Diagrammatic order: ``f >> g`` is ``g`` after ``f``."""
        return compose(other, self)

    def __matmul__(self, other: Morphism) -> Morphism:
        return tensor_morphisms(self, other)

    def __repr__(self):
        return f"Morphism({self.sexpr()} : {len(self.source)} -> {len(self.target)})"

    def sexpr(self) -> str:
        return self.tree.sexpr()

    def to_json(self) -> dict:
        return {"source": self.source.to_json(), "target": self.target.to_json(),
                "tree": self.sexpr()}


def id_morphism(w: TensorWord) -> Morphism:
    return Morphism(w, w, Identity(len(w)))


def compose(g: Morphism, f: Morphism) -> Morphism:
    """``g`` after ``f``; requires ``f.target == g.source`` factor by factor."""
    if f.target != g.source:
        raise BoundaryError(f"cannot compose: {f.target!r} is not {g.source!r}")
    return Morphism(f.source, g.target, Comp(g.tree, f.tree))


def tensor_morphisms(f: Morphism, g: Morphism) -> Morphism:
    return Morphism(f.source @ g.source, f.target @ g.target, Tensor(f.tree, g.tree))


def _check_position(w: TensorWord, i: int, span: int) -> None:
    if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i <= len(w) - span:
        raise PositionError(f"position {i} out of range for a word of length {len(w)}")


def braid(w: TensorWord, i: int) -> Morphism:
    """Swap factors ``i`` and ``i + 1``."""
    _check_position(w, i, 2)
    return Morphism.from_tree(w, Braid(i, len(w)))


def stroke_morphism(w: TensorWord, i: int, gen: StrokeGen) -> Morphism:
    _check_position(w, i, 1)
    return Morphism.from_tree(w, Stroke(i, gen, len(w)))


def braiding(w1: TensorWord, w2: TensorWord) -> Morphism:
    """
    The block braiding ``w1 (x) w2 -> w2 (x) w1`` as adjacent swaps.

    Trivial (an identity) when either side is the unit word.
    """
    source = w1 @ w2
    n, m = len(w1), len(w2)
    if n == 0 or m == 0:
        return id_morphism(source)
    tree: Node | None = None
    for j in range(m):
        # factor j of w2 sits at n + j and travels left to position j
        for p in range(n + j - 1, j - 1, -1):
            step = Braid(p, n + m)
            tree = step if tree is None else Comp(step, tree)
    return Morphism.from_tree(source, tree)


# extensional equality


@dataclass(frozen=True)
class TestEnsemble:
    """
    The word states on which two morphisms are compared: the source word,
    four boundary states and ``samples`` seeded random states over the
    source's region signature.
    """

    __test__ = False  # not a pytest class

    samples: int = 64
    seed: int = 0

    def states(self, word: TensorWord) -> list[tuple[PaintState, ...]]:
        base = word.factors
        out = [base]
        out.append(tuple(replace(s, load=0) for s in base))
        out.append(tuple(replace(s, load=LOAD_MAX) for s in base))
        out.append(tuple(replace(s, color=BLACK) for s in base))
        out.append(tuple(replace(s, color=WHITE) for s in base))
        rng = sampling.stream(self.seed, "ensemble", *word.signature)
        out.extend(sampling.random_states(rng, word.signature) for _ in range(self.samples))
        return out


DEFAULT_ENSEMBLE = TestEnsemble()


def first_disagreement(f: Morphism, g: Morphism,
                       ensemble: TestEnsemble = DEFAULT_ENSEMBLE) -> dict | None:
    """None when ``f`` and ``g`` agree, otherwise a description of the first witness."""
    if f.source != g.source or f.target != g.target:
        return {"reason": "endpoints differ",
                "left": f.to_json(), "right": g.to_json()}
    for state in ensemble.states(f.source):
        left, right = f(state), g(state)
        if left != right:
            return {"reason": "denotations differ",
                    "state": [s.to_json() for s in state],
                    "left_image": [s.to_json() for s in left],
                    "right_image": [s.to_json() for s in right]}
    return None


def morphism_equal(f: Morphism, g: Morphism, ensemble: TestEnsemble = DEFAULT_ENSEMBLE) -> bool:
    return first_disagreement(f, g, ensemble) is None
