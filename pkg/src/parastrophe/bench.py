"""Timing comparisons: direct conjugates vs the orthogonal-array route, pruned vs full search."""
from __future__ import annotations

import random
import time

from .classify import ClassKind, classify
from .conjugate import ALL_TAGS, conjugate, conjugate_via_oa
from .enumeration import enumerate_reduced
from .latin import random_latin_square


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return time.perf_counter() - t0, out


def run_bench(seed: int = 0, squares: int = 200, orders=(4, 6, 8), enum_orders=(5, 6)):
    """Return rows ``(task, order, variant, seconds, detail)``."""
    rng = random.Random(seed)
    rows = []
    for n in orders:
        sqs = [random_latin_square(n, rng) for _ in range(squares)]
        for name, fn in (("direct", conjugate), ("oa", conjugate_via_oa)):
            dt, _ = _timed(lambda: [fn(y, t) for y in sqs for t in ALL_TAGS])
            rows.append(("conjugate", n, name, dt, f"{squares * 6} conjugates"))
    for n in enum_orders:
        for name, prune in (("full", False), ("pruned", True)):
            dt, count = _timed(lambda: enumerate_reduced(n, prune, sink=lambda y: None))
            rows.append(("enumerate", n, name, dt, f"{count} streamed"))
        for name, prune in (("sweep", False), ("pruned", True)):
            dt, res = _timed(lambda: classify(n, ClassKind.MAIN_CLASS, pruning=prune))
            rows.append(("classify", n, name, dt, f"{res.class_count} main classes"))
    return rows


def format_rows(rows) -> str:
    lines = ["task\torder\tvariant\tseconds\tdetail"]
    lines += [f"{t}\t{n}\t{v}\t{s:.4f}\t{d}" for t, n, v, s, d in rows]
    return "\n".join(lines) + "\n"
