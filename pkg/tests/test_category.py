import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paintcat import sampling
from paintcat.canvas import PaintState, eval_word
from paintcat.category import (
    AddColor,
    BoundaryError,
    DoNothing,
    Morphism,
    PositionError,
    ScaleLoad,
    SetTexture,
    SignatureError,
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
from paintcat.color_texture import BLACK, BLUE, RED, YELLOW, Color, Texture
from paintcat.laws import LawCheckConfig, random_morphism, random_word

from conftest import exact_mix

CADMIUM_RED = Color(0xE3 * 257, 0x00, 0x22 * 257)
ULTRAMARINE = Color(0x12 * 257, 0x0A * 257, 0x8F * 257)


def word(*states):
    return TensorWord(states)


@pytest.fixture
def abc():
    return (PaintState("R1", RED, Texture.SMOOTH, 200),
            PaintState("R1", BLUE, Texture.TRANSPARENT, 128),
            PaintState("R2", YELLOW, Texture.IMPASTO, 64))


def test_tensor_words_concatenates(abc):
    a, b, c = abc
    assert tensor_words(word(a), word(b)) == word(a, b)
    assert (word(a) @ word(b)) @ word(c) == word(a) @ (word(b) @ word(c)) == word(a, b, c)
    assert unit_word() @ word(a) == word(a) == word(a) @ unit_word()
    assert unit_word() @ unit_word() == unit_word() == TensorWord()


def test_identity_morphism(abc):
    a, b, _ = abc
    f = id_morphism(word(a))
    assert f((a,)) == (a,)
    assert f.source == f.target == word(a)
    g = stroke_morphism(word(a, b), 1, SetTexture(Texture.STIPPLED))
    assert morphism_equal(compose(id_morphism(g.target), g), g)
    assert morphism_equal(compose(g, id_morphism(g.source)), g)
    e = id_morphism(unit_word())
    assert e(()) == () and len(e.source) == 0


def test_add_yellow_then_stipple():
    s = PaintState("R1", CADMIUM_RED, Texture.SMOOTH, 180)
    add_yellow = stroke_morphism(word(s), 0, AddColor(YELLOW, 128))
    stipple = stroke_morphism(add_yellow.target, 0, SetTexture(Texture.STIPPLED))
    f = compose(stipple, add_yellow)
    orange = Color(*(exact_mix(c, y, 128) for c, y in zip(CADMIUM_RED.channels, YELLOW.channels)))
    assert f.target == word(PaintState("R1", orange, Texture.STIPPLED, 180))
    assert f.source == word(s)


def test_stipple_example():
    s = PaintState("R2", ULTRAMARINE, Texture.SMOOTH, 90)
    f = stroke_morphism(word(s), 0, SetTexture(Texture.STIPPLED))
    assert f.target == word(PaintState("R2", ULTRAMARINE, Texture.STIPPLED, 90))


def test_add_color_worked_value():
    s = PaintState("R1", RED, Texture.SMOOTH, 77)
    f = stroke_morphism(word(s), 0, AddColor(YELLOW, 128))
    assert f.target[0].color == Color(65535, 32768, 0)


def test_do_nothing_is_identity(abc):
    w = word(*abc)
    for i in range(3):
        assert morphism_equal(stroke_morphism(w, i, DoNothing()), id_morphism(w))


def test_compose_associative(abc):
    w = word(*abc)
    f = stroke_morphism(w, 0, AddColor(BLACK, 64))
    g = braid(f.target, 1)
    h = stroke_morphism(g.target, 2, ScaleLoad(1, 2))
    assert morphism_equal(compose(h, compose(g, f)), compose(compose(h, g), f))
    assert morphism_equal(f >> g >> h, compose(h, compose(g, f)))


def test_compose_boundary_mismatch(abc):
    a, b, _ = abc
    f = stroke_morphism(word(a), 0, SetTexture(Texture.IMPASTO))
    with pytest.raises(BoundaryError):
        compose(id_morphism(word(b)), f)


def test_functoriality_darker_red_glossier_blue():
    red = PaintState("R1", RED, Texture.SMOOTH, 200)
    blue = PaintState("R2", BLUE, Texture.IMPASTO, 200)
    darken = stroke_morphism(word(red), 0, AddColor(BLACK, 64))
    glossify = stroke_morphism(word(blue), 0, SetTexture(Texture.TRANSPARENT))
    both = tensor_morphisms(darken, glossify)
    darker = Color(exact_mix(65535, 0, 64), 0, 0)
    assert darker == Color(49151, 0, 0)
    assert both.target == word(PaintState("R1", darker, Texture.SMOOTH, 200),
                               PaintState("R2", BLUE, Texture.TRANSPARENT, 200))
    # separately edited parts combine into the edited whole
    assert eval_word(both.target) == eval_word(darken.target @ glossify.target)


def test_tensor_of_identities(abc):
    a, b, c = abc
    assert morphism_equal(tensor_morphisms(id_morphism(word(a)), id_morphism(word(b, c))),
                          id_morphism(word(a, b, c)))


def test_braid_swaps(abc):
    a, b, _ = abc
    beta = braid(word(a, b), 0)
    assert beta.target == word(b, a)
    assert morphism_equal(compose(braid(beta.target, 0), beta), id_morphism(word(a, b)))


def test_braid_is_not_identity_on_repeated_factor(abc):
    a = abc[0]
    assert not morphism_equal(braid(word(a, a), 0), id_morphism(word(a, a)))


def test_braid_disjoint_regions_invisible(red_r1, blue_r2):
    beta = braid(word(red_r1, blue_r2), 0)
    assert eval_word(beta.target) == eval_word(beta.source)


def test_braid_positions(abc):
    w = word(*abc)
    with pytest.raises(PositionError):
        braid(w, 2)
    with pytest.raises(PositionError):
        braid(w, -1)
    with pytest.raises(PositionError):
        stroke_morphism(w, 3, DoNothing())
    with pytest.raises(PositionError):
        braid(unit_word(), 0)


def test_block_braiding(abc):
    a, b, c = abc
    beta = braiding(word(a, b), word(c))
    assert beta.target == word(c, a, b)
    beta = braiding(word(a), word(b, c))
    assert beta.target == word(b, c, a)
    assert morphism_equal(braiding(word(a), unit_word()), id_morphism(word(a)))
    assert morphism_equal(braiding(unit_word(), word(a)), id_morphism(word(a)))


def test_scale_load():
    s = PaintState("R1", RED, Texture.SMOOTH, 201)
    assert ScaleLoad(1, 2)(s).load == 100
    assert ScaleLoad(3, 2)(s).load == 256
    assert ScaleLoad(0, 3)(s).load == 0
    assert ScaleLoad(4, 2) == ScaleLoad(2, 1)
    with pytest.raises(ValueError):
        ScaleLoad(1, 0)


def test_denotation_checks_signature(abc):
    a, b, c = abc
    f = braid(word(a, b), 0)
    with pytest.raises(SignatureError):
        f((a, c))
    with pytest.raises(SignatureError):
        f((a,))


def test_constructor_rejects_inconsistent_endpoints(abc):
    a, b, _ = abc
    with pytest.raises(ValueError):
        Morphism(word(a, b), word(a, b), braid(word(a, b), 0).tree)


def test_sexpr_form(abc):
    a, b, _ = abc
    f = tensor_morphisms(stroke_morphism(word(a), 0, SetTexture(Texture.STIPPLED)),
                         id_morphism(word(b)))
    g = compose(braid(f.target, 0), f)
    assert g.sexpr() == "(comp (braid 0) (tensor (stroke 0 (set_texture stippled)) (id 1)))"


def test_ensemble_contents(abc):
    w = word(*abc)
    states = TestEnsemble(samples=5, seed=1).states(w)
    assert len(states) == 1 + 4 + 5
    assert states[0] == w.factors
    assert all(s.load == 0 for s in states[1])
    assert all(s.load == 256 for s in states[2])
    assert all(s.color == BLACK for s in states[3])
    assert all(tuple(x.region for x in st_) == w.signature for st_ in states)
    assert states == TestEnsemble(samples=5, seed=1).states(w)


seeds = st.integers(0, 2**32 - 1)
CFG = LawCheckConfig()


@settings(max_examples=50)
@given(seeds)
def test_endpoint_coherence(seed):
    rng = sampling.stream(seed, "coherence")
    w = random_word(rng, CFG)
    f = random_morphism(rng, w, max_steps=5)
    assert f(f.source.factors) == f.target.factors
    assert morphism_equal(f, f)


@settings(max_examples=30)
@given(seeds)
def test_interchange_property(seed):
    rng = sampling.stream(seed, "interchange")
    v, u = random_word(rng, CFG, 2), random_word(rng, CFG, 1)
    f = random_morphism(rng, v)
    g = random_morphism(rng, f.target)
    h = random_morphism(rng, u)
    k = random_morphism(rng, h.target)
    assert morphism_equal(tensor_morphisms(compose(g, f), compose(k, h)),
                          compose(tensor_morphisms(g, k), tensor_morphisms(f, h)),
                          TestEnsemble(16, seed))


@settings(max_examples=30)
@given(seeds)
def test_braid_naturality_property(seed):
    rng = sampling.stream(seed, "naturality")
    a, b = random_word(rng, CFG, 1), random_word(rng, CFG, 1)
    f, g = random_morphism(rng, a), random_morphism(rng, b)
    lhs = compose(tensor_morphisms(g, f), braid(a @ b, 0))
    rhs = compose(braid(f.target @ g.target, 0), tensor_morphisms(f, g))
    assert morphism_equal(lhs, rhs, TestEnsemble(16, seed))
