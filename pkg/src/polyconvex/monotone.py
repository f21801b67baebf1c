"""Cyclic monotonicity of a polygon's edge-argument sequence.

:func:`classify` makes one pass over the n cyclically adjacent pairs and
counts ascents, equalities and descents. The sequence is cyclically
non-decreasing iff there is at most one descent, and cyclically increasing
iff there is exactly one descent and no equality (or n == 1).
:func:`classify_bruteforce` tries every rotation against the definitions and
is kept as the reference for that rule.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Callable, Sequence

from . import angles
from .errors import EmptyPolygon
from .geom import Polygon


@dataclass(frozen=True)
class MonotoneClass:
    increasing: bool
    decreasing: bool
    nondecreasing: bool
    nonincreasing: bool
    c_increasing: bool
    c_decreasing: bool
    c_nondecreasing: bool
    c_nonincreasing: bool

    @property
    def c_strictly_monotone(self) -> bool:
        return self.c_increasing or self.c_decreasing

    @property
    def c_monotone(self) -> bool:
        return self.c_nondecreasing or self.c_nonincreasing

    def as_dict(self) -> dict:
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d["c_strictly_monotone"] = self.c_strictly_monotone
        d["c_monotone"] = self.c_monotone
        return d

    def cyclic_flags(self) -> tuple:
        return (self.c_increasing, self.c_decreasing, self.c_nondecreasing, self.c_nonincreasing)

    def mirrored(self) -> "MonotoneClass":
        """Flags with the increasing and decreasing sides exchanged."""
        return MonotoneClass(
            self.decreasing, self.increasing, self.nonincreasing, self.nondecreasing,
            self.c_decreasing, self.c_increasing, self.c_nonincreasing, self.c_nondecreasing,
        )


ALL_TRUE = MonotoneClass(*([True] * 8))


def classify_relations(rel: Sequence[int]) -> MonotoneClass:
    """Classify from the cyclic relations ``rel[i] = cmp(a_i, a_{i+1 mod n})``."""
    n = len(rel)
    if n == 0:
        raise EmptyPolygon("cannot classify an empty sequence")
    if n == 1:
        return ALL_TRUE
    linear = rel[:-1]
    asc = rel.count(-1)
    eq = rel.count(0)
    desc = n - asc - eq
    return MonotoneClass(
        increasing=all(r == -1 for r in linear),
        decreasing=all(r == 1 for r in linear),
        nondecreasing=all(r != 1 for r in linear),
        nonincreasing=all(r != -1 for r in linear),
        c_increasing=eq == 0 and desc == 1,
        c_decreasing=eq == 0 and asc == 1,
        c_nondecreasing=desc <= 1,
        c_nonincreasing=asc <= 1,
    )


def classify_sequence(values: Sequence, compare: Callable) -> MonotoneClass:
    n = len(values)
    return classify_relations([compare(values[i], values[(i + 1) % n]) for i in range(n)])


def classify_sequence_bruteforce(values: Sequence, compare: Callable) -> MonotoneClass:
    """Reference classifier: every rotation, every ordered pair. O(n^3) comparisons."""
    n = len(values)
    if n == 0:
        raise EmptyPolygon("cannot classify an empty sequence")

    def chain(seq, ok):
        return all(ok(compare(seq[i], seq[j])) for i in range(len(seq)) for j in range(i + 1, len(seq)))

    tests = {
        "increasing": lambda r: r < 0,
        "decreasing": lambda r: r > 0,
        "nondecreasing": lambda r: r <= 0,
        "nonincreasing": lambda r: r >= 0,
    }
    rotations = [list(values[k:]) + list(values[:k]) for k in range(n)]
    flags = {}
    for name, ok in tests.items():
        flags[name] = chain(values, ok)
        flags["c_" + name] = any(chain(rot, ok) for rot in rotations)
    return MonotoneClass(**flags)


def classify(poly: Polygon) -> MonotoneClass:
    """Monotonicity flags of the edge-argument sequence of a locally-ordinary polygon.

    A 1-gon has no defined argument sequence; it is reported with every flag
    set, matching the vacuous reading of the chains.
    """
    n = len(poly)
    if n == 0:
        raise EmptyPolygon("the empty polygon has no argument sequence")
    if n == 1:
        return ALL_TRUE
    ex, ey = angles.edge_xy(poly)
    return classify_relations(_relations(ex, ey))


def _relations(ex, ey) -> list:
    cmp = angles.compare_xy
    n = len(ex)
    rel = [cmp(ex[i], ey[i], ex[i + 1], ey[i + 1]) for i in range(n - 1)]
    rel.append(cmp(ex[-1], ey[-1], ex[0], ey[0]))
    return rel


def classify_bruteforce(poly: Polygon) -> MonotoneClass:
    n = len(poly)
    if n == 0:
        raise EmptyPolygon("the empty polygon has no argument sequence")
    if n == 1:
        return ALL_TRUE
    return classify_sequence_bruteforce(angles.edge_vectors(poly), angles.arg_compare)
