from fractions import Fraction
from math import floor
from pathlib import Path

import pytest

from paintcat.canvas import PaintState
from paintcat.color_texture import BLUE, RED, Color, RegionPaint, Texture

ROOT = Path(__file__).resolve().parent.parent
QUICKSTART = ROOT / "demos" / "quickstart.paint"
SCRIPTS = Path(__file__).resolve().parent / "scripts"
GOLDEN = Path(__file__).resolve().parent / "golden"


def exact_mix(bottom, top, load):
    """Independent oracle: exact rational weighted mean, rounded half up."""
    return floor(Fraction(bottom * (256 - load) + top * load, 256) + Fraction(1, 2))


def sabotaged_layer(bottom, top):
    """A broken kernel: divides by 257 instead of 256, so c over c drifts."""
    mixed = Color(*((b * (256 - top.load) + t * top.load) // 257
                    for b, t in zip(bottom.color.channels, top.color.channels)))
    return RegionPaint(mixed, top.texture if top.load >= 128 else bottom.texture)


@pytest.fixture
def sabotaged_kernel():
    return sabotaged_layer


@pytest.fixture
def red_r1():
    return PaintState("R1", RED, Texture.SMOOTH, 200)


@pytest.fixture
def blue_r1():
    return PaintState("R1", BLUE, Texture.IMPASTO, 200)


@pytest.fixture
def blue_r2():
    return PaintState("R2", BLUE, Texture.IMPASTO, 200)


# acceptance summary: one line per criterion, printed after the run

_criteria: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[number] = (title, report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome = _criteria[number]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:2d}. {title}")
