"""Differential fuzzing of the deciders against each other and the oracles."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import gen
from .convexity import (
    is_ordinary,
    is_simply_convex,
    is_strictly_convex_angles,
    is_strictly_convex_signs,
    property_report,
    sign_chain_constant,
    sign_sequences,
)
from .geom import Point, Polygon
from .errors import GenerationFailed, NotLocallyOrdinary
from .monotone import classify
from .oracle import is_convex_oracle
from .transforms import AffineMap, affine, pythagorean_rotation, reflect, rotate_rational, scale, translate

ORACLE_MAX_N = 64


def random_affine(rng: random.Random) -> AffineMap:
    while True:
        m = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)]
        if m[0] * m[3] - m[1] * m[2] != 0:
            break
    return AffineMap(*m, Fraction(rng.randint(-5, 5), rng.randint(1, 4)), Fraction(rng.randint(-5, 5), rng.randint(1, 4)))


def _cyclic_or_none(poly):
    try:
        return classify(poly).cyclic_flags()
    except NotLocallyOrdinary:
        return None


def decider_disagreements(poly: Polygon, rep, signs=None, angle=None) -> list:
    """Decider pairs that must agree on every polygon but do not on ``poly``.

    ``rep`` is the polygon's property report. The two linear-time deciders can
    be passed in when already computed.
    """
    n = len(poly)
    signs = is_strictly_convex_signs(poly) if signs is None else signs
    angle = is_strictly_convex_angles(poly) if angle is None else angle
    out = []
    if signs != angle:
        out.append("signs!=angles")
    if signs != (rep.strict and rep.convex):
        out.append("signs!=oracle")
    if n >= 3:
        one = rep.ordinary and rep.locally_simple and rep.convex
        two = rep.simple and rep.convex
        if not one == two == is_simply_convex(poly):
            out.append("nonstrict-three-way")
        p1 = rep.ordinary and rep.locally_strict and rep.convex
        p2 = rep.quasi_strict and rep.convex
        if not p1 == p2 == (rep.strict and rep.convex):
            out.append("strict-three-way")
    return out


def check_polygon(poly: Polygon, seed: int = 0) -> list:
    """Names of every relation that fails on ``poly``; empty when all hold.

    ``seed`` fixes the random transforms so that a failure is reproducible.
    """
    n = len(poly)
    signs = is_strictly_convex_signs(poly)
    angle = is_strictly_convex_angles(poly)
    if n > ORACLE_MAX_N:
        return ["signs!=angles"] if signs != angle else []
    rep = property_report(poly)
    failures = decider_disagreements(poly, rep, signs, angle)
    if n >= 4 and signs and not sign_chain_constant(sign_sequences(poly)):
        failures.append("sign-chain")
    # Deleting a vertex keeps ordinary convexity only for simple polygons: a
    # non-simple one may backtrack along a hull edge and lose coverage.
    if rep.simple and rep.convex:
        for i in range(n):
            sub = Polygon(poly.vertices[:i] + poly.vertices[i + 1:])
            if not is_convex_sub(sub):
                failures.append("sub-polygon")
                break

    rng = random.Random(seed)
    m = random_affine(rng)
    if property_report(affine(poly, m)) != rep:
        failures.append("affine-invariance")
    flags = _cyclic_or_none(poly) if n else None
    if flags is not None:
        c, s = pythagorean_rotation(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        lam = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        t = Point(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), rng.randint(-9, 9))
        for name, image in (
            ("rotation", rotate_rational(poly, c, s)),
            ("homothety", scale(poly, lam)),
            ("translation", translate(poly, t)),
        ):
            if _cyclic_or_none(image) != flags:
                failures.append(f"{name}-invariance")
        inc, dec, nondec, noninc = flags
        if _cyclic_or_none(reflect(poly)) != (dec, inc, noninc, nondec):
            failures.append("reflection-swap")
    return failures


def is_convex_sub(poly: Polygon) -> bool:
    """Ordinarily convex: all vertices distinct and the polygon convex."""
    return is_ordinary(poly) and is_convex_oracle(poly)


def shrink(poly: Polygon, failing, seed: int = 0) -> Polygon:
    """Greedy reduction keeping ``failing(poly, seed)`` truthy.

    Deletes single vertices while the failure persists, then tries halving
    all coordinates (rounded down), and repeats until neither helps.
    """
    progress = True
    while progress:
        progress = False
        i = 0
        while i < len(poly):
            cand = Polygon(poly.vertices[:i] + poly.vertices[i + 1:])
            if failing(cand, seed):
                poly = cand
                progress = True
            else:
                i += 1
        halved = Polygon(Point(math.floor(v.x / 2), math.floor(v.y / 2)) for v in poly.vertices)
        if halved != poly and failing(halved, seed):
            poly = halved
            progress = True
    return poly


@dataclass
class FuzzReport:
    iterations: int = 0
    checked: int = 0
    failures: dict = field(default_factory=dict)
    counterexample: Polygon | None = None
    counterexample_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def summary(self) -> str:
        lines = [f"iterations: {self.iterations}", f"polygons checked: {self.checked}"]
        if self.ok:
            lines.append("disagreements: none")
        else:
            lines.append("disagreements: " + ", ".join(self.counterexample_failures))
        return "\n".join(lines)


def _convex(make, n, seed, bound):
    # Small bounds cannot host many distinct edge directions; widen them when needed.
    try:
        return make(n, seed, bound)
    except GenerationFailed:
        return make(n, seed, None)


def run_fuzz(iterations: int, seed: int, max_n: int = 12, bound: int = 3) -> FuzzReport:
    """Check seeded random and mutated polygons; stop at the first failure and shrink it."""
    report = FuzzReport(iterations=iterations)
    rng = random.Random(seed)
    for _ in range(iterations):
        n = rng.randint(0, max_n)
        s = rng.getrandbits(64)
        r = rng.random()
        if r < 0.4 or n < 3:
            poly = gen.gen_random(n, s, bound)
        elif r < 0.6:
            poly = _convex(gen.gen_strictly_convex, n, s, bound)
        elif r < 0.75 and n >= 4:
            poly = _convex(gen.gen_convex_degenerate, n, s, bound)
        else:
            poly = gen.mutate(_convex(gen.gen_strictly_convex, n, s, bound), rng.getrandbits(64))
        check_seed = rng.getrandbits(32)
        report.checked += 1
        fails = check_polygon(poly, check_seed)
        if fails:
            for f in fails:
                report.failures[f] = report.failures.get(f, 0) + 1
            small = shrink(poly, lambda p, sd: bool(check_polygon(p, sd)), check_seed)
            report.counterexample = small
            report.counterexample_failures = check_polygon(small, check_seed)
            break
    return report
