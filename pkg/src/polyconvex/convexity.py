"""Linear-time convexity deciders and the polygon property report."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from . import angles
from .errors import NotLocallyOrdinary, TooFewVertices
from .geom import Polygon, collinear, dim, edge_common_point
from .monotone import _relations, classify, classify_relations
from .oracle import is_convex_oracle, is_simple_oracle, is_strict_oracle


def _sgn(v):
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class SignTestTrace:
    """Orientation signs of a polygon with n >= 4 vertices.

    ``a[i - 2]`` is sign det(V_{i-1}, V_i, V_{i+1}) for i = 2..n-2,
    ``b[i - 2]`` is sign det(V_0, V_{i-1}, V_i) for i = 2..n-1 and
    ``c[i - 2]`` is sign det(V_0, V_1, V_i) for i = 2..n-1.
    """

    a: tuple
    b: tuple
    c: tuple

    def a_(self, i):
        return self.a[i - 2]

    def b_(self, i):
        return self.b[i - 2]

    def c_(self, i):
        return self.c[i - 2]


def sign_sequences(poly: Polygon) -> SignTestTrace:
    n = len(poly)
    if n < 4:
        raise TooFewVertices(n, 4)
    xs, ys = poly.integral_coords()
    x0, y0, x1, y1 = xs[0], ys[0], xs[1], ys[1]
    a = tuple(
        _sgn((xs[i] - xs[i - 1]) * (ys[i + 1] - ys[i - 1]) - (xs[i + 1] - xs[i - 1]) * (ys[i] - ys[i - 1]))
        for i in range(2, n - 1)
    )
    b = tuple(
        _sgn((xs[i - 1] - x0) * (ys[i] - y0) - (xs[i] - x0) * (ys[i - 1] - y0))
        for i in range(2, n)
    )
    c = tuple(
        _sgn((x1 - x0) * (ys[i] - y0) - (xs[i] - x0) * (y1 - y0))
        for i in range(2, n)
    )
    return SignTestTrace(a, b, c)


def sign_test_holds(t: SignTestTrace) -> bool:
    """a_i b_i > 0, a_i b_{i+1} > 0 and c_i c_{i+1} > 0 for i = 2..n-2."""
    a, b, c = t.a, t.b, t.c
    for k in range(len(a)):
        if a[k] * b[k] <= 0 or a[k] * b[k + 1] <= 0 or c[k] * c[k + 1] <= 0:
            return False
    return True


def sign_chain_constant(t: SignTestTrace) -> bool:
    """All of a_2..a_{n-2}, b_2..b_{n-1}, c_2..c_{n-1} equal and nonzero."""
    signs = set(t.a) | set(t.b) | set(t.c)
    return len(signs) == 1 and 0 not in signs


def is_strictly_convex_signs(poly: Polygon) -> bool:
    """Strict convexity from 3(n - 3) orientation-sign conditions.

    Runs in O(n) with early exit; n <= 2 is always strictly convex and a
    triangle is strictly convex iff it is non-degenerate.
    """
    n = len(poly)
    if n <= 2:
        return True
    xs, ys = poly.integral_coords()
    x0, y0, x1, y1 = xs[0], ys[0], xs[1], ys[1]
    if n == 3:
        return (x1 - x0) * (ys[2] - y0) != (xs[2] - x0) * (y1 - y0)
    dx1, dy1 = x1 - x0, y1 - y0
    # Running values for i = 2: b_i uses (V_0, V_{i-1}, V_i), c_i uses (V_0, V_1, V_i).
    c_prev = _sgn(dx1 * (ys[2] - y0) - (xs[2] - x0) * dy1)
    b_prev = c_prev
    for i in range(2, n - 1):
        xp, yp, xi, yi, xn, yn = xs[i - 1], ys[i - 1], xs[i], ys[i], xs[i + 1], ys[i + 1]
        a = _sgn((xi - xp) * (yn - yp) - (xn - xp) * (yi - yp))
        b_next = _sgn((xi - x0) * (yn - y0) - (xn - x0) * (yi - y0))
        c_next = _sgn(dx1 * (yn - y0) - (xn - x0) * dy1)
        if a * b_prev <= 0 or a * b_next <= 0 or c_prev * c_next <= 0:
            return False
        b_prev, c_prev = b_next, c_next
    return True


def is_strictly_convex_angles(poly: Polygon) -> bool:
    """Strict convexity as cyclic strict monotonicity of the edge arguments. O(n).

    A polygon with two coinciding consecutive vertices has no argument
    sequence and, for n >= 3, is not strict either, so it is rejected.
    """
    n = len(poly)
    if n <= 2:
        return True
    try:
        ex, ey = angles.edge_xy(poly)
    except NotLocallyOrdinary:
        return False
    cmp = angles.compare_xy
    asc = desc = 0
    px, py = ex[-1], ey[-1]
    for i in range(n):
        x, y = ex[i], ey[i]
        r = cmp(px, py, x, y)
        if r == 0:
            return False
        if r < 0:
            asc += 1
        else:
            desc += 1
        if asc > 1 and desc > 1:
            return False
        px, py = x, y
    return asc == 1 or desc == 1


def is_simply_convex(poly: Polygon) -> bool:
    """Convex and simple, decided as: locally-ordinary, cyclically monotone, dim 2."""
    n = len(poly)
    if n < 3:
        raise TooFewVertices(n, 3)
    try:
        ex, ey = angles.edge_xy(poly)
    except NotLocallyOrdinary:
        return False
    mc = classify_relations(_relations(ex, ey))
    return mc.c_monotone and dim(poly) == 2


@dataclass(frozen=True)
class PropertyReport:
    locally_ordinary: bool
    ordinary: bool
    locally_strict: bool
    quasi_strict: bool
    strict: bool
    locally_simple: bool
    simple: bool
    convex: bool
    dim: int

    def as_dict(self) -> dict:
        return asdict(self)


def is_locally_ordinary(poly: Polygon) -> bool:
    v = poly.vertices
    n = len(v)
    return all(v[i] != v[(i + 1) % n] for i in range(n))


def is_ordinary(poly: Polygon) -> bool:
    return len(set(poly.vertices)) == len(poly)


def is_locally_strict(poly: Polygon) -> bool:
    v = poly.vertices
    n = len(v)
    return not any(collinear(v[i - 1], v[i], v[(i + 1) % n]) for i in range(n))


def is_quasi_strict(poly: Polygon) -> bool:
    v = poly.vertices
    n = len(v)
    for i in range(n):
        a, b = v[i], v[(i + 1) % n]
        for j in range(n):
            if j != i and j != (i + 1) % n and collinear(a, b, v[j]):
                return False
    return True


def is_locally_simple(poly: Polygon) -> bool:
    v = poly.vertices
    n = len(v)
    for i in range(n):
        a, b, c = v[i], v[(i + 1) % n], v[(i + 2) % n]
        if edge_common_point(a, b, b, c) is not None:
            return False
    return True


def property_report(poly: Polygon) -> PropertyReport:
    return PropertyReport(
        locally_ordinary=is_locally_ordinary(poly),
        ordinary=is_ordinary(poly),
        locally_strict=is_locally_strict(poly),
        quasi_strict=is_quasi_strict(poly),
        strict=is_strict_oracle(poly),
        locally_simple=is_locally_simple(poly),
        simple=is_simple_oracle(poly),
        convex=is_convex_oracle(poly),
        dim=dim(poly),
    )


def monotone_or_none(poly: Polygon):
    """:func:`classify` for polygons where it is defined, else None."""
    if len(poly) == 0:
        return None
    try:
        return classify(poly)
    except NotLocallyOrdinary:
        return None
