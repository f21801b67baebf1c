"""Brute-force ground truth: exact convex hull and definition-level checks.

Nothing here is clever about convexity; these functions exist so that the
linear-time deciders in :mod:`polyconvex.convexity` have something
independent to be compared against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .geom import Point, Polygon, collinear, dim, edge_common_point


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class Hull:
    """Extreme points in counter-clockwise order, starting at the lexicographic minimum.

    Degenerate hulls have 0, 1 or 2 vertices.
    """

    vertices: tuple

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        h = self.vertices
        return [(h[i], h[(i + 1) % len(h)]) for i in range(len(h))]


def _hull_xy(pts):
    # Monotone chain on integer/rational tuples; collinear points are dropped.
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def convex_hull(points: Iterable) -> Hull:
    pts = [(p.x, p.y) if isinstance(p, Point) else tuple(p) for p in points]
    return Hull(tuple(Point(x, y) for x, y in _hull_xy(pts)))


class _Locator:
    """Finds the hull edges through a point, in O(log h), for h >= 3.

    Works on a fan of triangles from hull vertex 0.
    """

    def __init__(self, hull):
        self.h = hull
        self.n = len(hull)

    def _on(self, k, p):
        a = self.h[k]
        b = self.h[(k + 1) % self.n]
        if _cross(a, b, p) != 0:
            return False
        return (p[0] - a[0]) * (p[0] - b[0]) + (p[1] - a[1]) * (p[1] - b[1]) <= 0

    def edges_through(self, p):
        h, n = self.h, self.n
        h0 = h[0]
        if _cross(h0, h[1], p) < 0 or _cross(h0, h[-1], p) > 0:
            return []
        lo, hi = 1, n - 2
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if _cross(h0, h[mid], p) >= 0:
                lo = mid
            else:
                hi = mid - 1
        cands = {0, n - 1, (lo - 1) % n, lo, (lo + 1) % n}
        return [k for k in sorted(cands) if self._on(k, p)]


def is_convex_oracle(poly: Polygon) -> bool:
    """Whether the union of the closed edges equals the boundary of the hull.

    Polygons of dimension <= 1 are always convex: the edges form a connected
    path through every vertex, so they cover the hull segment exactly, and a
    segment (or point) in the plane is its own boundary.

    In dimension 2 each edge must lie on the hull boundary, which for a convex
    region holds iff both endpoints and the midpoint do; then the edges lying
    on each hull edge must cover it.
    """
    n = len(poly)
    if n == 0 or dim(poly) <= 1:
        return True
    xs, ys = poly.integral_coords()
    # Doubled so that edge midpoints stay integral.
    pts = [(2 * x, 2 * y) for x, y in zip(xs, ys)]
    hull = _hull_xy(pts)
    loc = _Locator(hull)
    h = len(hull)
    covered = [[] for _ in range(h)]
    for i in range(n):
        a = pts[i]
        b = pts[(i + 1) % n]
        if a == b:
            if not loc.edges_through(a):
                return False
            continue
        m = ((a[0] + b[0]) // 2, (a[1] + b[1]) // 2)
        if not (loc.edges_through(a) and loc.edges_through(b)):
            return False
        mk = loc.edges_through(m)
        if not mk:
            return False
        # m is not a hull vertex (it is a midpoint of two distinct points), so mk has one edge.
        k = mk[0]
        s = hull[k]
        d = (hull[(k + 1) % h][0] - s[0], hull[(k + 1) % h][1] - s[1])
        ta = (a[0] - s[0]) * d[0] + (a[1] - s[1]) * d[1]
        tb = (b[0] - s[0]) * d[0] + (b[1] - s[1]) * d[1]
        covered[k].append((min(ta, tb), max(ta, tb)))
    for k in range(h):
        s = hull[k]
        e = hull[(k + 1) % h]
        length = (e[0] - s[0]) ** 2 + (e[1] - s[1]) ** 2
        reach = 0
        for lo, hi in sorted(covered[k]):
            if lo > reach:
                return False
            reach = max(reach, hi)
        if reach < length:
            return False
    return True


def is_strict_oracle(poly: Polygon) -> bool:
    """No three vertices with distinct indices are collinear. O(n^3)."""
    return not any(collinear(a, b, c) for a, b, c in itertools.combinations(poly.vertices, 3))


def is_simple_oracle(poly: Polygon) -> bool:
    """All half-open edges [V_i, V_{i+1}) pairwise disjoint. O(n^2)."""
    return simple_violation(poly) is None


def simple_violation(poly: Polygon):
    """``(i, j, point)`` for the first pair of intersecting half-open edges, else None."""
    v = poly.vertices
    n = len(v)
    for i in range(n):
        for j in range(i + 1, n):
            p = edge_common_point(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])
            if p is not None:
                return i, j, p
    return None


def is_strictly_convex_hull(poly: Polygon) -> bool:
    """Strict convexity decided through the hull in O(n log n).

    For n >= 3, a convex polygon is strict exactly when every vertex is a
    distinct extreme point, i.e. the hull has n vertices.
    """
    n = len(poly)
    if n <= 2:
        return True
    if n != len(_hull_xy(list(zip(*poly.integral_coords())))):
        return False
    return is_convex_oracle(poly)
