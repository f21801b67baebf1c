"""Timing harness for the linear-time deciders against the hull oracle."""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass, field

from .convexity import is_strictly_convex_angles, is_strictly_convex_signs
from .gen import gen_strictly_convex
from .oracle import is_strictly_convex_hull

METHODS = ("angles", "signs", "hull")
_FUNCS = {
    "angles": is_strictly_convex_angles,
    "signs": is_strictly_convex_signs,
    "hull": is_strictly_convex_hull,
}


def time_call(fn, arg, repeats: int):
    """Median wall time of ``repeats`` calls on a monotonic clock, plus the last result."""
    times, result = _time_rounds(fn, [arg], repeats)
    return statistics.median(times[0]), result[0]


def _time_rounds(fn, args, repeats: int):
    # Round-robin over the inputs, so that a slow spell on a shared machine
    # hits every size alike instead of inflating one size's median.
    times = [[] for _ in args]
    results = [None] * len(args)
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repeats):
            for k, arg in enumerate(args):
                t0 = time.perf_counter()
                results[k] = fn(arg)
                times[k].append(time.perf_counter() - t0)
    finally:
        if gc_was_enabled:
            gc.enable()
    return times, results


@dataclass
class BenchRow:
    n: int
    times: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)


@dataclass
class BenchResult:
    rows: list
    elapsed: float

    def ratios(self, method: str) -> list:
        """time(n_{k+1}) / time(n_k) for consecutive sizes where both were timed."""
        out = []
        for prev, cur in zip(self.rows, self.rows[1:]):
            a, b = prev.times.get(method), cur.times.get(method)
            out.append(None if a is None or b is None or a == 0 else b / a)
        return out

    def agree(self) -> bool:
        return all(len(set(r.verdicts.values())) == 1 for r in self.rows)

    def table(self) -> str:
        head = f"{'n':>10}" + "".join(f"{m + ' [s]':>14}" for m in METHODS)
        lines = [head]
        for r in self.rows:
            cells = "".join(f"{r.times[m]:>14.4f}" if m in r.times else f"{'-':>14}" for m in METHODS)
            lines.append(f"{r.n:>10}{cells}")
        if len(self.rows) > 1:
            lines.append("")
            lines.append(f"{'ratio':>10}" + "".join(f"{m:>14}" for m in METHODS))
            per = {m: self.ratios(m) for m in METHODS}
            for k, r in enumerate(self.rows[1:]):
                cells = "".join(f"{per[m][k]:>14.3f}" if per[m][k] is not None else f"{'-':>14}" for m in METHODS)
                lines.append(f"{r.n:>10}{cells}")
        lines.append("")
        lines.append(f"verdicts agree: {'yes' if self.agree() else 'NO'}; elapsed {self.elapsed:.1f}s")
        return "\n".join(lines)


def run_bench(
    sizes,
    repeats: int = 5,
    seed: int = 1,
    hull_max_n: int | None = 200_000,
    hull_repeats: int = 1,
    log=None,
) -> BenchResult:
    """Time each decider on one strictly convex n-gon per size.

    All polygons are generated first and generation is not timed. Each linear
    decider is timed in ``repeats`` rounds, one call per size per round, and
    the median per size is reported. The linear deciders run before the hull
    oracle so that the oracle's allocations do not disturb them. The oracle is skipped above ``hull_max_n`` (None means
    no limit).
    """
    if not sizes:
        raise ValueError("sizes must be nonempty")
    t_start = time.perf_counter()
    polys = []
    for n in sizes:
        poly = gen_strictly_convex(n, seed + n)
        poly.integral_coords()
        polys.append(poly)
    rows = [BenchRow(n) for n in sizes]
    for m in METHODS:
        if m == "hull":
            continue
        _FUNCS[m](polys[0])  # warm-up
        gc.collect()
        times, verdicts = _time_rounds(_FUNCS[m], polys, repeats)
        for row, ts, v in zip(rows, times, verdicts):
            row.times[m], row.verdicts[m] = statistics.median(ts), v
            if log:
                log(f"n={row.n}: {m} {row.times[m]:.4f}s")
    for row, poly in zip(rows, polys):
        if hull_max_n is not None and row.n > hull_max_n:
            continue
        gc.collect()
        row.times["hull"], row.verdicts["hull"] = time_call(is_strictly_convex_hull, poly, hull_repeats)
        if log:
            log(f"n={row.n}: hull {row.times['hull']:.4f}s")
    return BenchResult(rows, time.perf_counter() - t_start)
