"""
Checking the laws
=================

The law checker draws seeded instances for each law and reports the first
counterexample it meets. A deliberately broken kernel shows what a failure
looks like, and the recorded instance can be replayed on its own.
"""

import time

from paintcat.laws import LawCheckConfig, replay, run_all

cfg = LawCheckConfig(seed=42, samples=64)
start = time.perf_counter()
report = run_all(cfg, workers=4)
print(f"{len(report.laws)} laws in {time.perf_counter() - start:.2f}s, passed={report.passed}")
for entry in report.laws:
    print(f"  {entry.name:22s} {entry.instances:4d}  {'ok' if entry.passed else 'FAIL'}")


def off_by_a_little(bottom, top):
    """Divide by 257 instead of 256; repainting then keeps darkening."""
    from paintcat.color_texture import Color, RegionPaint

    if bottom is None:
        return RegionPaint(top.color, top.texture)
    mix = [(b * (256 - top.load) + t * top.load) // 257
           for b, t in zip(bottom.color.channels, top.color.channels)]
    texture = top.texture if top.load >= 128 else bottom.texture
    return RegionPaint(Color(*mix), texture)


bad = LawCheckConfig(seed=42, samples=64, kernel=off_by_a_little)
entry = run_all(bad, laws=["idempotence"])["idempotence"]
print("sabotaged idempotence passed:", entry.passed)
print("counterexample index:", entry.counterexample["index"])
print("replay still fails:", replay("idempotence", entry.counterexample, bad) is not None)
