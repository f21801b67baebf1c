"""Seeded polygon generators and mutators for differential tests and benchmarks.

Every generator takes an explicit integer seed and uses its own
``random.Random`` instance, so the same arguments always give the same
polygon.
"""

from __future__ import annotations

import functools
import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import angles
from .errors import GenerationFailed, TooFewVertices
from .geom import Point, Polygon
from .oracle import convex_hull

KINDS = ("strictly_convex", "convex_degenerate", "random", "collinear", "mutated")
MUTATIONS = ("swap", "duplicate", "midpoint", "perturb", "shift")


def _direction(x, y):
    g = math.gcd(x, y)
    return x // g, y // g


def _sort_by_arg(ex, ey):
    order = sorted(range(len(ex)), key=lambda i: math.atan2(ey[i], ex[i]) % (2 * math.pi))
    cmp = angles.compare_xy
    if any(cmp(ex[a], ey[a], ex[b], ey[b]) >= 0 for a, b in zip(order, order[1:])):
        # Float keys were not enough to separate the directions; fall back to exact sorting.
        key = functools.cmp_to_key(lambda a, b: cmp(ex[a], ey[a], ex[b], ey[b]))
        order = sorted(range(len(ex)), key=key)
    return order


def polygon_from_edge_vectors(vectors, start=(0, 0)) -> Polygon:
    """Chain ``vectors`` in increasing argument order, starting at ``start``.

    With pairwise distinct directions summing to zero this yields a polygon
    whose edge arguments increase, i.e. a strictly convex polygon.
    """
    ex = [int(v[0]) for v in vectors]
    ey = [int(v[1]) for v in vectors]
    if sum(ex) or sum(ey):
        raise ValueError("edge vectors must sum to zero")
    order = _sort_by_arg(ex, ey)
    x, y = start
    xs, ys = [], []
    for i in order:
        xs.append(x)
        ys.append(y)
        x += ex[i]
        y += ey[i]
    return Polygon.from_xy(xs, ys)


def default_bound(n: int) -> int:
    # About 2.4 B^2 primitive directions fit in [-B, B]^2.
    return max(3, math.isqrt(n) + 8)


def gen_strictly_convex(n: int, seed: int, coord_bound: int | None = None, attempts: int = 200) -> Polygon:
    """Strictly convex lattice n-gon whose edge vectors have components in [-coord_bound, coord_bound]."""
    if n < 3:
        raise TooFewVertices(n, 3)
    bound = default_bound(n) if coord_bound is None else coord_bound
    if (2 * bound + 1) ** 2 - 1 < n:
        raise GenerationFailed(f"only {(2 * bound + 1) ** 2 - 1} vectors in the box, need {n} directions")
    rng = random.Random(seed)
    randint = rng.randint
    for _ in range(attempts):
        seen = set()
        ex, ey = [], []
        draws = 0
        budget = 50 * n + 1000
        while len(ex) < n - 1 and draws < budget:
            draws += 1
            x, y = randint(-bound, bound), randint(-bound, bound)
            if x == 0 and y == 0:
                continue
            d = _direction(x, y)
            if d in seen:
                continue
            seen.add(d)
            ex.append(x)
            ey.append(y)
        if len(ex) < n - 1:
            continue
        cx, cy = -sum(ex), -sum(ey)
        if (cx == 0 and cy == 0) or _direction(cx, cy) in seen:
            continue
        ex.append(cx)
        ey.append(cy)
        return polygon_from_edge_vectors(list(zip(ex, ey)))
    raise GenerationFailed(f"no direction-distinct family for n={n}, bound={bound} in {attempts} attempts")


def split_edges(poly: Polygon, count: int, rng: random.Random) -> Polygon:
    """Insert ``count`` points strictly inside randomly chosen edges."""
    if count <= 0:
        return poly
    v = poly.vertices
    n = len(v)
    per_edge = [0] * n
    for _ in range(count):
        per_edge[rng.randrange(n)] += 1
    out = []
    for i in range(n):
        a, b = v[i], v[(i + 1) % n]
        out.append(a)
        c = per_edge[i]
        if c:
            q = c + 1 + rng.randint(0, 3)
            for k in sorted(rng.sample(range(1, q), c)):
                out.append(a + (b - a) * Fraction(k, q))
    return Polygon(out)


def gen_convex_degenerate(n: int, seed: int, coord_bound: int | None = None) -> Polygon:
    """Simply convex n-gon with at least one vertex inside an edge of the hull."""
    if n < 4:
        raise TooFewVertices(n, 4)
    rng = random.Random(seed)
    m = rng.randint(3, n - 1)
    base = gen_strictly_convex(m, rng.getrandbits(64), coord_bound)
    return split_edges(base, n - m, rng)


def gen_random(n: int, seed: int, coord_bound: int = 3) -> Polygon:
    """n i.i.d. lattice points, uniform on [-coord_bound, coord_bound]^2."""
    rng = random.Random(seed)
    b = coord_bound
    return Polygon.from_xy([rng.randint(-b, b) for _ in range(n)], [rng.randint(-b, b) for _ in range(n)]) if n else Polygon()


def gen_collinear(n: int, seed: int, coord_bound: int = 3) -> Polygon:
    """n lattice points on one random line (dimension at most 1)."""
    rng = random.Random(seed)
    b = coord_bound
    ox, oy = rng.randint(-b, b), rng.randint(-b, b)
    while True:
        dx, dy = rng.randint(-b, b), rng.randint(-b, b)
        if dx or dy:
            break
    dx, dy = _direction(dx, dy)
    ks = [rng.randint(-b, b) for _ in range(n)]
    return Polygon.from_xy([ox + k * dx for k in ks], [oy + k * dy for k in ks])


def mutate(poly: Polygon, seed: int, op: str | None = None) -> Polygon:
    """Apply one small edit chosen by ``seed`` (or forced by ``op``)."""
    rng = random.Random(seed)
    op = op or rng.choice(MUTATIONS)
    if op not in MUTATIONS:
        raise ValueError(f"unknown mutation {op!r}")
    v = list(poly.vertices)
    n = len(v)
    if n == 0:
        return poly
    if op == "swap":
        if n < 2:
            return poly
        i, j = rng.sample(range(n), 2)
        v[i], v[j] = v[j], v[i]
    elif op == "duplicate":
        i = rng.randrange(n)
        v.insert(i, v[i])
    elif op == "midpoint":
        i = rng.randrange(n)
        v.insert(i + 1, (v[i] + v[(i + 1) % n]) / 2)
    elif op == "perturb":
        i = rng.randrange(n)
        d = rng.choice((-1, 1))
        v[i] = Point(v[i].x + d, v[i].y) if rng.random() < 0.5 else Point(v[i].x, v[i].y + d)
    else:
        k = rng.randrange(n)
        v = v[k:] + v[:k]
    return Polygon(v)


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int
    seed: int
    coord_bound: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.coord_bound is not None and self.coord_bound <= 0:
            raise ValueError("coord_bound must be positive")

    def generate(self) -> Polygon:
        k, n, s, b = self.kind, self.n, self.seed, self.coord_bound
        if b is None:
            b = default_bound(n) if k in ("strictly_convex", "convex_degenerate", "mutated") else 3
        if k == "strictly_convex":
            return gen_strictly_convex(n, s, b)
        if k == "convex_degenerate":
            return gen_convex_degenerate(n, s, b)
        if k == "random":
            return gen_random(n, s, b)
        if k == "collinear":
            return gen_collinear(n, s, b)
        rng = random.Random(s)
        if n < 3:
            return mutate(gen_random(n, rng.getrandbits(64), b), rng.getrandbits(64))
        return mutate(gen_strictly_convex(n, rng.getrandbits(64), b), rng.getrandbits(64))

    def describe(self) -> str:
        bound = "auto" if self.coord_bound is None else self.coord_bound
        return f"kind={self.kind} n={self.n} seed={self.seed} bound={bound}"


def gen_hull_polygon(k: int, seed: int, coord_bound: int = 3) -> Polygon:
    """Strictly convex polygon with vertices in [-coord_bound, coord_bound]^2.

    Takes the hull of ``k`` random lattice points (redrawn until it has at
    least 3 vertices), then picks a random start vertex and orientation.
    """
    if k < 3:
        raise TooFewVertices(k, 3)
    rng = random.Random(seed)
    b = coord_bound
    while True:
        hull = convex_hull((rng.randint(-b, b), rng.randint(-b, b)) for _ in range(k)).vertices
        if len(hull) >= 3:
            break
    v = list(hull)
    if rng.random() < 0.5:
        v.reverse()
    s = rng.randrange(len(v))
    return Polygon(v[s:] + v[:s])


def _in_box(poly: Polygon, b) -> bool:
    return all(-b <= c <= b for v in poly.vertices for c in (v.x, v.y))


def corpus(seed: int, count: int, min_n: int = 3, max_n: int = 12, bound: int = 3) -> list:
    """Mixed, reproducible list of polygons with vertices in [-bound, bound]^2.

    About half are uniform random lattice polygons (rich in degeneracies).
    The rest are strictly convex hull polygons, the same with points inserted
    inside edges, collinear polygons, or small mutations of the convex ones,
    so that positive verdicts are well represented. Candidates outside the
    box or the size range are redrawn.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(min_n, max_n)
        s = rng.getrandbits(64)
        r = rng.random()
        if r < 0.5:
            poly = gen_random(n, s, bound)
        elif 0.8 <= r < 0.85:
            poly = gen_collinear(n, s, bound)
        else:
            poly = gen_hull_polygon(rng.randint(3, 3 * n), s, bound)
            if r >= 0.65 and len(poly) < n:
                poly = split_edges(poly, rng.randint(1, n - len(poly)), rng)
            if r >= 0.85:
                poly = mutate(poly, rng.getrandbits(64))
        if min_n <= len(poly) <= max_n and _in_box(poly, bound):
            out.append(poly)
    return out


def exhaustive(n: int, coords=range(3)) -> list:
    """Every n-gon with vertices on the grid ``coords`` x ``coords``."""
    grid = [Point(x, y) for x in coords for y in coords]
    return [Polygon(vs) for vs in itertools.product(grid, repeat=n)]
