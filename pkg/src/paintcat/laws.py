"""
Coherence-law checks for Paint.

Each law is a function of one seeded instance. Instance ``k`` of law ``name``
draws from its own stream keyed by ``(seed, name, k)``, so a reported
counterexample can be replayed alone with :func:`replay`, and checks can run
in any order or concurrently without changing the report.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import sampling
from .canvas import CanvasState, Kernel, PaintState, Region, RegionError, eval_word
from .category import (
    AddColor,
    DoNothing,
    Morphism,
    ScaleLoad,
    SetColor,
    SetTexture,
    TensorWord,
    TestEnsemble,
    braid,
    braiding,
    compose,
    first_disagreement,
    id_morphism,
    stroke_morphism,
    tensor_morphisms,
    unit_word,
)
from .color_texture import BLUE, RED, Color, Texture, color_distance, layer

DEFAULT_SEED = 42

DEFAULT_POOL = (
    Region("R1", 0, 0, 32, 32),
    Region("R2", 32, 0, 32, 32),
    Region("R3", 64, 0, 32, 32),
)


@dataclass(frozen=True)
class LawCheckConfig:
    seed: int = DEFAULT_SEED
    samples: int = 64
    max_word_len: int = 4
    region_pool: tuple[Region, ...] = DEFAULT_POOL
    ensemble_samples: int = 64
    kernel: Kernel = field(default=layer, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "region_pool", tuple(self.region_pool))
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.max_word_len < 3:
            raise ValueError("max_word_len must be at least 3")
        if len(self.region_pool) < 2:
            raise ValueError("the region pool needs at least two regions")
        if self.ensemble_samples < 0:
            raise ValueError("ensemble_samples must be non-negative")

    @property
    def region_names(self) -> list[str]:
        return [r.name for r in self.region_pool]

    def stream(self, law: str, index: int) -> np.random.Generator:
        return sampling.stream(self.seed, law, index)

    def ensemble(self, rng: np.random.Generator) -> TestEnsemble:
        return TestEnsemble(self.ensemble_samples, int(rng.integers(2**32)))

    def eval(self, word) -> CanvasState:
        return eval_word(word, kernel=self.kernel)


@dataclass
class LawEntry:
    name: str
    instances: int
    passed: bool
    counterexample: dict | None = None
    elapsed: float = 0.0

    def to_json(self) -> dict:
        # elapsed is left out so reports stay byte-identical between runs
        return {"name": self.name, "instances": self.instances,
                "passed": self.passed, "counterexample": self.counterexample}


@dataclass
class LawReport:
    seed: int
    laws: list[LawEntry]

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.laws)

    def __getitem__(self, name: str) -> LawEntry:
        for entry in self.laws:
            if entry.name == name:
                return entry
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"seed": self.seed, "laws": [e.to_json() for e in self.laws],
                "passed": self.passed}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


# random words and morphisms


def random_word(rng, cfg: LawCheckConfig, length: int | None = None) -> TensorWord:
    if length is None:
        length = int(rng.integers(0, cfg.max_word_len + 1))
    regions = sampling.random_regions(rng, cfg.region_names, length)
    return TensorWord(sampling.random_states(rng, regions))


def random_gen(rng):
    kind = int(rng.integers(5))
    if kind == 0:
        return SetColor(sampling.random_color(rng))
    if kind == 1:
        return AddColor(sampling.random_color(rng), sampling.random_load(rng))
    if kind == 2:
        return SetTexture(sampling.random_texture(rng))
    if kind == 3:
        return ScaleLoad(int(rng.integers(0, 5)), int(rng.integers(1, 5)))
    return DoNothing()


def random_morphism(rng, source: TensorWord, max_steps: int = 3,
                    braids: bool = True) -> Morphism:
    """A random chain of strokes (and adjacent braids) starting at ``source``."""
    f = id_morphism(source)
    if len(source) == 0:
        return f
    for _ in range(int(rng.integers(0, max_steps + 1))):
        w = f.target
        if braids and len(w) >= 2 and rng.random() < 0.3:
            step = braid(w, int(rng.integers(len(w) - 1)))
        else:
            step = stroke_morphism(w, int(rng.integers(len(w))), random_gen(rng))
        f = compose(step, f)
    return f


def _distinct_regions(rng, cfg: LawCheckConfig, n: int) -> list[str]:
    picks = rng.choice(len(cfg.region_pool), size=n, replace=False)
    return [cfg.region_pool[int(i)].name for i in picks]


def _words(*words: TensorWord) -> list:
    return [w.to_json() for w in words]


# law instances: each returns None on success or a counterexample dict


def _associativity_instance(cfg: LawCheckConfig, rng) -> dict | None:
    a, b, c, d = (random_word(rng, cfg) for _ in range(4))
    groupings = [
        ((a @ b) @ c) @ d,
        (a @ (b @ c)) @ d,
        a @ ((b @ c) @ d),
        a @ (b @ (c @ d)),
        (a @ b) @ (c @ d),
    ]
    if any(g != groupings[0] for g in groupings[1:]):
        return {"words": _words(a, b, c, d), "groupings": _words(*groupings)}
    return None


def _unit_instance(cfg: LawCheckConfig, rng) -> dict | None:
    w, v = random_word(rng, cfg), random_word(rng, cfg)
    unit = unit_word()
    left, right = unit @ w, w @ unit
    if not (left == w == right):
        return {"word": w.to_json(), "left": left.to_json(), "right": right.to_json()}
    evals = [cfg.eval(left), cfg.eval(w), cfg.eval(right)]
    if not (evals[0] == evals[1] == evals[2]):
        return {"word": w.to_json(), "evaluations": [e.to_json() for e in evals]}
    if (w @ unit) @ v != w @ (unit @ v):
        return {"triangle": _words(w, v)}
    return None


def _idempotence_instance(cfg: LawCheckConfig, rng) -> dict | None:
    region = cfg.region_names[int(rng.integers(len(cfg.region_pool)))]
    s = sampling.random_state(rng, region)
    twice, once = cfg.eval([s, s]), cfg.eval([s])
    if twice != once:
        return {"state": s.to_json(), "twice": twice.to_json(), "once": once.to_json()}
    return None


def _interchange_instance(cfg: LawCheckConfig, rng) -> dict | None:
    v = random_word(rng, cfg, int(rng.integers(0, cfg.max_word_len // 2 + 1)))
    u = random_word(rng, cfg, int(rng.integers(0, cfg.max_word_len // 2 + 1)))
    f = random_morphism(rng, v)
    g = random_morphism(rng, f.target)
    h = random_morphism(rng, u)
    k = random_morphism(rng, h.target)
    lhs = tensor_morphisms(compose(g, f), compose(k, h))
    rhs = compose(tensor_morphisms(g, k), tensor_morphisms(f, h))
    witness = first_disagreement(lhs, rhs, cfg.ensemble(rng))
    if witness is not None:
        return {"f": f.sexpr(), "g": g.sexpr(), "h": h.sexpr(), "k": k.sexpr(),
                "lhs": lhs.to_json(), "rhs": rhs.to_json(), "witness": witness}
    return None


def _naturality_instance(cfg: LawCheckConfig, rng) -> dict | None:
    a_state, b_state = sampling.random_states(
        rng, sampling.random_regions(rng, cfg.region_names, 2))
    f = random_morphism(rng, TensorWord([a_state]))
    g = random_morphism(rng, TensorWord([b_state]))
    lhs = compose(tensor_morphisms(g, f), braid(f.source @ g.source, 0))
    rhs = compose(braid(f.target @ g.target, 0), tensor_morphisms(f, g))
    witness = first_disagreement(lhs, rhs, cfg.ensemble(rng))
    if witness is not None:
        return {"f": f.to_json(), "g": g.to_json(),
                "lhs": lhs.sexpr(), "rhs": rhs.sexpr(), "witness": witness}
    return None


def yang_baxter_sides(x: PaintState, y: PaintState, z: PaintState) -> tuple[Morphism, Morphism]:
    """The two composites reversing ``x (x) y (x) z`` by adjacent braidings."""
    X, Y, Z = TensorWord([x]), TensorWord([y]), TensorWord([z])
    lhs = compose(
        tensor_morphisms(braiding(Y, Z), id_morphism(X)),
        compose(tensor_morphisms(id_morphism(Y), braiding(X, Z)),
                tensor_morphisms(braiding(X, Y), id_morphism(Z))))
    rhs = compose(
        tensor_morphisms(id_morphism(Z), braiding(X, Y)),
        compose(tensor_morphisms(braiding(X, Z), id_morphism(Y)),
                tensor_morphisms(id_morphism(X), braiding(Y, Z))))
    return lhs, rhs


def yang_baxter_permutation_oracle(x: PaintState, y: PaintState, z: PaintState) -> bool:
    """
    Feed every ordering of three same-region states through both composites
    and check each returns exactly the reversed ordering.
    """
    if not x.region == y.region == z.region:
        raise RegionError("the permutation oracle needs three states in one region")
    lhs, rhs = yang_baxter_sides(x, y, z)
    for perm in itertools.permutations((x, y, z)):
        expected = perm[::-1]
        if lhs(perm) != expected or rhs(perm) != expected:
            return False
    return True


def _yang_baxter_instance(cfg: LawCheckConfig, rng) -> dict | None:
    x, y, z = sampling.random_states(rng, sampling.random_regions(rng, cfg.region_names, 3))
    lhs, rhs = yang_baxter_sides(x, y, z)
    reversed_word = TensorWord([z, y, x])
    if lhs.source != TensorWord([x, y, z]) or lhs.target != reversed_word or rhs.target != reversed_word:
        return {"triple": _words(TensorWord([x, y, z])), "lhs": lhs.to_json(), "rhs": rhs.to_json()}
    witness = first_disagreement(lhs, rhs, cfg.ensemble(rng))
    if witness is not None:
        return {"lhs": lhs.to_json(), "rhs": rhs.to_json(), "witness": witness}
    return None


def _yang_baxter_fixed_triple(cfg: LawCheckConfig) -> tuple[PaintState, ...]:
    region = cfg.region_names[0]
    return (PaintState(region, RED, Texture.SMOOTH, 200),
            PaintState(region, BLUE, Texture.TRANSPARENT, 128),
            PaintState(region, Color(0x22 * 257, 0xCC * 257, 0x55 * 257),
                       Texture.IMPASTO, 64))


def _trivial_braiding_instance(cfg: LawCheckConfig, rng) -> dict | None:
    ra, rb = _distinct_regions(rng, cfg, 2)
    a, b = sampling.random_state(rng, ra), sampling.random_state(rng, rb)
    ab, ba = cfg.eval([a, b]), cfg.eval([b, a])
    if ab != ba:
        return {"pair": [a.to_json(), b.to_json()], "ab": ab.to_json(), "ba": ba.to_json()}
    single = TensorWord([a])
    for name, beta in (("right_unit", braiding(single, unit_word())),
                       ("left_unit", braiding(unit_word(), single))):
        witness = first_disagreement(beta, id_morphism(single), cfg.ensemble(rng))
        if witness is not None:
            return {"unit_side": name, "braiding": beta.to_json(), "witness": witness}
    return None


@dataclass(frozen=True)
class DominanceReport:
    distance: int
    forward: CanvasState
    backward: CanvasState

    def to_json(self) -> dict:
        return {"distance": self.distance, "forward": self.forward.to_json(),
                "backward": self.backward.to_json()}


def check_dominance(a: PaintState, b: PaintState, kernel: Kernel = layer) -> DominanceReport:
    """How far apart ``a`` then ``b`` and ``b`` then ``a`` look in their shared region."""
    if a.region != b.region:
        raise RegionError(f"dominance needs one region, got {a.region} and {b.region}")
    forward = eval_word([a, b], kernel=kernel)
    backward = eval_word([b, a], kernel=kernel)
    distance = color_distance(forward[a.region].color, backward[a.region].color)
    return DominanceReport(distance, forward, backward)


def order_witness(region: str) -> tuple[PaintState, PaintState]:
    """Red and blue at load 200 in one region: layering order shows."""
    return (PaintState(region, RED, Texture.SMOOTH, 200),
            PaintState(region, BLUE, Texture.IMPASTO, 200))


def _dominance_instance(cfg: LawCheckConfig, rng) -> dict | None:
    region = cfg.region_names[int(rng.integers(len(cfg.region_pool)))]
    a = PaintState(region, sampling.random_color(rng), sampling.random_texture(rng), 128)
    b = PaintState(region, sampling.random_color(rng), sampling.random_texture(rng), 128)
    report = check_dominance(a, b, cfg.kernel)
    if report.distance != 0:
        return {"pair": [a.to_json(), b.to_json()], "dominance": report.to_json()}
    return None


# fixed controls run once per check, outside the sampled instances


def _yang_baxter_control(cfg: LawCheckConfig) -> dict | None:
    triple = _yang_baxter_fixed_triple(cfg)
    if not yang_baxter_permutation_oracle(*triple):
        return {"control": "permutation oracle", "triple": [s.to_json() for s in triple]}
    return None


def _order_control(cfg: LawCheckConfig) -> dict | None:
    report = check_dominance(*order_witness(cfg.region_names[0]), cfg.kernel)
    if report.distance == 0:
        return {"control": "same-region pair must not commute",
                "dominance": report.to_json()}
    return None


Instance = Callable[[LawCheckConfig, np.random.Generator], "dict | None"]

LAWS: dict[str, tuple[Instance, Callable[[LawCheckConfig], "dict | None"] | None]] = {
    "strict_associativity": (_associativity_instance, None),
    "unit_laws": (_unit_instance, None),
    "idempotence": (_idempotence_instance, None),
    "interchange": (_interchange_instance, None),
    "braid_naturality": (_naturality_instance, None),
    "yang_baxter": (_yang_baxter_instance, _yang_baxter_control),
    "trivial_braiding": (_trivial_braiding_instance, _order_control),
    "dominance": (_dominance_instance, _order_control),
}


def _guarded(fn, *args) -> dict | None:
    # a law whose instance cannot even be assembled (endpoints stop matching,
    # say) has failed; report it rather than crash the whole run
    try:
        return fn(*args)
    except (ValueError, IndexError, TypeError) as err:
        return {"error": f"{type(err).__name__}: {err}"}


def run_law(name: str, cfg: LawCheckConfig) -> LawEntry:
    instance, control = LAWS[name]
    start = time.perf_counter()
    counterexample = _guarded(control, cfg) if control is not None else None
    tested = 0
    if counterexample is None:
        for index in range(cfg.samples):
            tested += 1
            found = _guarded(instance, cfg, cfg.stream(name, index))
            if found is not None:
                counterexample = {"index": index, **found}
                break
    return LawEntry(name, tested, counterexample is None, counterexample,
                    time.perf_counter() - start)


def replay(name: str, counterexample: dict, cfg: LawCheckConfig) -> dict | None:
    """Re-run the single failing instance (or control) recorded in ``counterexample``."""
    instance, control = LAWS[name]
    if "index" not in counterexample:
        return _guarded(control, cfg)
    return _guarded(instance, cfg, cfg.stream(name, counterexample["index"]))


def check_strict_associativity(cfg: LawCheckConfig) -> LawEntry:
    return run_law("strict_associativity", cfg)


def check_unit_laws(cfg: LawCheckConfig) -> LawEntry:
    return run_law("unit_laws", cfg)


def check_idempotence(cfg: LawCheckConfig) -> LawEntry:
    return run_law("idempotence", cfg)


def check_interchange(cfg: LawCheckConfig) -> LawEntry:
    return run_law("interchange", cfg)


def check_braid_naturality(cfg: LawCheckConfig) -> LawEntry:
    return run_law("braid_naturality", cfg)


def check_yang_baxter(cfg: LawCheckConfig) -> LawEntry:
    return run_law("yang_baxter", cfg)


def check_trivial_braiding(cfg: LawCheckConfig) -> LawEntry:
    return run_law("trivial_braiding", cfg)


def check_non_commutativity(cfg: LawCheckConfig) -> LawEntry:
    return run_law("dominance", cfg)


def run_all(cfg: LawCheckConfig | None = None, workers: int = 1,
            laws: Sequence[str] | None = None) -> LawReport:
    cfg = cfg or LawCheckConfig()
    names = list(laws) if laws is not None else list(LAWS)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            entries = list(pool.map(lambda n: run_law(n, cfg), names))
    else:
        entries = [run_law(n, cfg) for n in names]
    return LawReport(cfg.seed, entries)
