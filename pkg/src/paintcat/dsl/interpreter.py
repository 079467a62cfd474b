"""Execution of parsed stroke programs."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ..canvas import CanvasState, PaintState, Region, RegionError, RegionRegistry, eval_word
from ..category import (
    AddColor,
    DoNothing,
    PositionError,
    ScaleLoad,
    SetColor,
    SetTexture,
    StrokeGen,
    TensorWord,
    braid,
    stroke_morphism,
)
from ..laws import DEFAULT_POOL, DEFAULT_SEED, LawCheckConfig, LawReport, run_all
from ..render import Image, rasterize, save_ppm
from . import ast
from .parser import parse


class EvalError(Exception):
    """A runtime error, located at the statement that raised it."""

    def __init__(self, message: str, span: ast.Span | None = None):
        self.message = message
        self.span = span
        super().__init__(f"{span}: {message}" if span else message)


@dataclass
class RenderOutput:
    word: str
    path: Path
    image: Image


@dataclass
class Environment:
    default_seed: int = DEFAULT_SEED
    default_samples: int = 64
    out_dir: Path = Path(".")
    write_files: bool = True
    regions: RegionRegistry = field(default_factory=RegionRegistry)
    bindings: dict = field(default_factory=dict)


@dataclass
class ExecutionResult:
    env: Environment
    output: list[str] = field(default_factory=list)
    canvases: list[CanvasState] = field(default_factory=list)
    reports: list[LawReport] = field(default_factory=list)
    renders: list[RenderOutput] = field(default_factory=list)
    last_word: str | None = None

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    @property
    def stdout(self) -> str:
        return "".join(text + "\n" for text in self.output)


def build_gen(spec: ast.GenSpec) -> StrokeGen:
    if spec.kind == "set_color":
        return SetColor(spec.args[0])
    if spec.kind == "add_color":
        return AddColor(*spec.args)
    if spec.kind == "set_texture":
        return SetTexture(spec.args[0])
    if spec.kind == "scale_load":
        return ScaleLoad(*spec.args)
    if spec.kind == "do_nothing":
        return DoNothing()
    raise ValueError(f"unknown stroke {spec.kind!r}")


class _Interpreter:
    def __init__(self, env: Environment):
        self.env = env
        self.result = ExecutionResult(env)

    def word(self, name: str) -> TensorWord:
        value = self.env.bindings.get(name)
        if value is None:
            raise EvalError(f"unbound identifier {name!r}")
        if isinstance(value, PaintState):
            return TensorWord([value])
        if isinstance(value, TensorWord):
            return value
        raise EvalError(f"{name!r} is a stroke, not a word")

    def expr(self, node) -> TensorWord:
        if isinstance(node, ast.Name):
            return self.word(node.name)
        if isinstance(node, ast.Unit):
            return TensorWord()
        return self.expr(node.left) @ self.expr(node.right)

    def run(self, script: ast.Script) -> ExecutionResult:
        for stmt in script:
            try:
                getattr(self, "exec_" + type(stmt).__name__)(stmt)
            except EvalError as err:
                raise EvalError(err.message, stmt.span) from None
            except (RegionError, PositionError, ValueError, TypeError, OSError) as err:
                raise EvalError(str(err), stmt.span) from err
        return self.result

    def exec_RegionDecl(self, stmt: ast.RegionDecl):
        self.env.regions.register(Region(stmt.name, stmt.x, stmt.y, stmt.width, stmt.height))

    def exec_StateBind(self, stmt: ast.StateBind):
        if stmt.region not in self.env.regions:
            raise EvalError(f"unbound region {stmt.region!r}")
        self.env.bindings[stmt.name] = PaintState(stmt.region, stmt.color, stmt.texture, stmt.load)

    def exec_WordBind(self, stmt: ast.WordBind):
        self.env.bindings[stmt.name] = self.expr(stmt.expr)
        self.result.last_word = stmt.name

    def exec_StrokeBind(self, stmt: ast.StrokeBind):
        self.env.bindings[stmt.name] = build_gen(stmt.gen)

    def exec_Apply(self, stmt: ast.Apply):
        gen = self.env.bindings.get(stmt.stroke)
        if gen is None:
            raise EvalError(f"unbound identifier {stmt.stroke!r}")
        if not isinstance(gen, StrokeGen):
            raise EvalError(f"{stmt.stroke!r} is not a stroke")
        f = stroke_morphism(self.word(stmt.word), stmt.position, gen)
        self.env.bindings[stmt.word] = f.target
        self.result.last_word = stmt.word

    def exec_BraidStmt(self, stmt: ast.BraidStmt):
        self.env.bindings[stmt.word] = braid(self.word(stmt.word), stmt.position).target
        self.result.last_word = stmt.word

    def exec_Check(self, stmt: ast.Check):
        pool = tuple(self.env.regions.values())
        cfg = LawCheckConfig(
            seed=stmt.seed if stmt.seed is not None else self.env.default_seed,
            samples=stmt.samples if stmt.samples is not None else self.env.default_samples,
            region_pool=pool if len(pool) >= 2 else DEFAULT_POOL,
        )
        report = run_all(cfg)
        self.result.reports.append(report)
        self.result.output.append(report.dumps())

    def canvas(self, name: str) -> CanvasState:
        return eval_word(self.word(name), self.env.regions)

    def render_word(self, name: str, size=None) -> Image:
        width, height = size if size is not None else self.env.regions.extent()
        return rasterize(self.canvas(name), self.env.regions, width, height)

    def exec_Render(self, stmt: ast.Render):
        image = self.render_word(stmt.word, stmt.size)
        path = self.env.out_dir / stmt.path
        if self.env.write_files:
            save_ppm(image, path)
        self.result.renders.append(RenderOutput(stmt.word, path, image))
        self.result.last_word = stmt.word

    def exec_Print(self, stmt: ast.Print):
        canvas = self.canvas(stmt.word)
        self.result.canvases.append(canvas)
        self.result.output.append(canvas.dumps())


def eval_script(script: ast.Script, env: Environment | None = None) -> ExecutionResult:
    return _Interpreter(env or Environment()).run(script)


def run_source(text: str, env: Environment | None = None) -> ExecutionResult:
    return eval_script(parse(text), env)


def render_final(result: ExecutionResult, size=None) -> Image:
    """Render the word most recently bound, changed or rendered by the script."""
    if result.last_word is None:
        raise EvalError("script binds no word to render")
    interp = _Interpreter(result.env)
    try:
        return interp.render_word(result.last_word, size)
    except (RegionError, ValueError) as err:
        raise EvalError(str(err)) from err
