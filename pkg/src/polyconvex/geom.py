"""Exact planar primitives: scalars, points, segments, polygons and predicates.

Scalars are Python ``int`` or ``fractions.Fraction`` values. Every value that
leaves this module is canonical: a Fraction with denominator 1 is collapsed to
an ``int``, so equal numbers always compare, hash and print identically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Sequence, Union

Scalar = Union[int, Fraction]


def scalar(value) -> Scalar:
    """Convert ``value`` to a canonical exact scalar.

    Accepts ints, Fractions, Decimals, floats (converted exactly, no rounding)
    and strings holding an integer, a decimal literal or ``p/q``.
    """
    if type(value) is int:
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, str):
        value = Fraction(value.strip())
    elif isinstance(value, (Rational, Decimal, float)):
        if isinstance(value, float) and not math.isfinite(value):
            raise ValueError(f"non-finite coordinate {value!r}")
        value = Fraction(value)
    else:
        raise TypeError(f"cannot convert {type(value).__name__} to a scalar")
    if value.denominator == 1:
        return value.numerator
    return value


def sign(value) -> int:
    return (value > 0) - (value < 0)


class Point:
    """A point (or vector) with exact coordinates."""

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x = scalar(x)
        self.y = scalar(y)

    @classmethod
    def _raw(cls, x, y):
        # Skips canonicalisation; callers guarantee canonical scalars.
        p = object.__new__(cls)
        p.x = x
        p.y = y
        return p

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return Point(-self.x, -self.y)

    def __mul__(self, s):
        return Point(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, d):
        return Point(Fraction(self.x) / d, Fraction(self.y) / d)

    def dot(self, other) -> Scalar:
        return scalar(self.x * other.x + self.y * other.y)

    def cross(self, other) -> Scalar:
        return scalar(self.x * other.y - self.y * other.x)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __lt__(self, other):
        return (self.x, self.y) < (other.x, other.y)

    def __iter__(self) -> Iterator[Scalar]:
        yield self.x
        yield self.y

    def __repr__(self):
        return f"Point({_fmt(self.x)}, {_fmt(self.y)})"


Vector = Point


def _fmt(v) -> str:
    return str(v)


def as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return Point(x, y)


def det3(a: Point, i: Point, j: Point) -> Scalar:
    """Determinant of the rows (1, a), (1, i), (1, j), via its 2x2 cofactor."""
    return scalar((i.x - a.x) * (j.y - a.y) - (j.x - a.x) * (i.y - a.y))


def orientation_sign(a: Point, i: Point, j: Point) -> int:
    return sign((i.x - a.x) * (j.y - a.y) - (j.x - a.x) * (i.y - a.y))


def collinear(a: Point, b: Point, c: Point) -> bool:
    return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y) == 0


def to_one_side(a: Point, b: Point, i: Point, j: Point) -> bool:
    """True iff ``a`` and ``b`` lie (weakly) on one side of the line through ``i``, ``j``."""
    return det3(a, i, j) * det3(b, i, j) >= 0


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """Membership of ``p`` in the closed segment [a, b]."""
    if not collinear(a, b, p):
        return False
    return (p.x - a.x) * (p.x - b.x) + (p.y - a.y) * (p.y - b.y) <= 0


@dataclass(frozen=True)
class Segment:
    """Segment [a, b], or the half-open [a, b) when ``closed`` is False.

    [a, a] is the singleton {a}; [a, a) is empty.
    """

    a: Point
    b: Point
    closed: bool = True

    @classmethod
    def half_open(cls, a, b) -> "Segment":
        return cls(as_point(a), as_point(b), closed=False)

    def is_empty(self) -> bool:
        return not self.closed and self.a == self.b

    def __contains__(self, p) -> bool:
        p = as_point(p)
        if not self.closed and p == self.b:
            return False
        return on_segment(p, self.a, self.b)


def segment_intersection(a1: Point, b1: Point, a2: Point, b2: Point):
    """Intersection of the closed segments [a1, b1] and [a2, b2].

    Returns None when they are disjoint, a Point when they meet in a single
    point, and a pair ``(p, q)`` with p != q when they overlap along [p, q]
    (p is the end nearer to a1).
    """
    if a1 == b1:
        return a1 if on_segment(a1, a2, b2) else None
    if a2 == b2:
        return a2 if on_segment(a2, a1, b1) else None
    d1 = b1 - a1
    d2 = b2 - a2
    w = a2 - a1
    denom = d1.cross(d2)
    if denom != 0:
        t = Fraction(w.cross(d2), denom)
        u = Fraction(w.cross(d1), denom)
        if 0 <= t <= 1 and 0 <= u <= 1:
            return a1 + d1 * t
        return None
    if w.cross(d1) != 0:
        return None
    # Collinear: parametrise the second segment along the first.
    ll = d1.dot(d1)
    s0 = Fraction(w.dot(d1), ll)
    s1 = Fraction((b2 - a1).dot(d1), ll)
    lo = max(Fraction(0), min(s0, s1))
    hi = min(Fraction(1), max(s0, s1))
    if lo > hi:
        return None
    if lo == hi:
        return a1 + d1 * lo
    return a1 + d1 * lo, a1 + d1 * hi


def half_open_common_point(a1: Point, b1: Point, a2: Point, b2: Point):
    """A point of [a1, b1) ∩ [a2, b2), or None if the two sets are disjoint."""
    if a1 == b1 or a2 == b2:
        return None
    x = segment_intersection(a1, b1, a2, b2)
    if x is None:
        return None
    if isinstance(x, tuple):
        p, q = x
        # The midpoint of a positive-length overlap is an endpoint of neither segment.
        return (p + q) / 2
    if x == b1 or x == b2:
        return None
    return x


def edge_common_point(a1: Point, b1: Point, a2: Point, b2: Point):
    """A common point of two polygon edges taken half-open, or None.

    A polygon edge [V_i, V_{i+1}) always contains its start vertex: for
    V_i == V_{i+1} it is the singleton {V_i} rather than the empty set. This
    is what makes every simple polygon ordinary.
    """
    if a1 == b1:
        if a2 == b2:
            return a1 if a1 == a2 else None
        return a1 if a1 != b2 and on_segment(a1, a2, b2) else None
    if a2 == b2:
        return a2 if a2 != b1 and on_segment(a2, a1, b1) else None
    return half_open_common_point(a1, b1, a2, b2)


def half_open_disjoint(s1: Segment, s2: Segment) -> bool:
    """True iff the half-open segments [s1.a, s1.b) and [s2.a, s2.b) are disjoint."""
    return half_open_common_point(s1.a, s1.b, s2.a, s2.b) is None


class Polygon(Sequence[Point]):
    """An ordered, possibly degenerate, sequence of vertices.

    Indexing is cyclic only through :meth:`vertex`; plain ``P[i]`` behaves
    like a tuple.
    """

    __slots__ = ("vertices", "_integral")

    def __init__(self, vertices: Iterable = ()):
        self.vertices = tuple(as_point(v) for v in vertices)
        self._integral = None

    @classmethod
    def from_xy(cls, xs, ys) -> "Polygon":
        """Build from parallel coordinate sequences of plain ints (fast path)."""
        poly = object.__new__(cls)
        poly.vertices = tuple(Point._raw(x, y) for x, y in zip(xs, ys))
        poly._integral = None
        return poly

    def __len__(self):
        return len(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def __iter__(self):
        return iter(self.vertices)

    def vertex(self, i) -> Point:
        return self.vertices[i % len(self.vertices)]

    def __eq__(self, other):
        if not isinstance(other, Polygon):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        inner = ", ".join(f"({v.x}, {v.y})" for v in self.vertices)
        return f"Polygon([{inner}])"

    def integral_coords(self):
        """Integer coordinate lists ``(xs, ys)`` of a positive rescaling of the polygon.

        Scaling by the lcm of all denominators is a homothety with a positive
        factor, so every predicate in this package gives the same answer on
        the rescaled coordinates. The result is cached.
        """
        if self._integral is None:
            xs = [v.x for v in self.vertices]
            ys = [v.y for v in self.vertices]
            den = 1
            for c in xs + ys:
                if type(c) is not int:
                    den = den * c.denominator // math.gcd(den, c.denominator)
            if den != 1:
                xs = [int(c * den) for c in xs]
                ys = [int(c * den) for c in ys]
            self._integral = (xs, ys)
        return self._integral


def dim(poly: Polygon) -> int:
    """Affine dimension of the vertex set: -1, 0, 1 or 2."""
    verts = poly.vertices
    if not verts:
        return -1
    first = verts[0]
    other = next((v for v in verts if v != first), None)
    if other is None:
        return 0
    for v in verts:
        if not collinear(first, other, v):
            return 2
    return 1
