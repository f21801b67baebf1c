"""Exact ordering of nonzero vectors by their angle argument in [0, 2*pi).

No trigonometry is used except in :func:`arg_approx`, which is for
diagnostics only. The order splits the punctured plane into two half-planes:
``H_MINUS`` (y > 0, or y == 0 and x > 0) holds the arguments in [0, pi) and
``H_PLUS`` (y < 0, or y == 0 and x < 0) those in [pi, 2*pi). Within one
half-plane, u precedes v iff the cross product u x v is positive.
"""

from __future__ import annotations

import enum
import math

from .errors import NotLocallyOrdinary, ZeroVector
from .geom import Point, Polygon


class HalfPlane(enum.Enum):
    H_MINUS = 0
    H_PLUS = 1


LT, EQ, GT = -1, 0, 1


def _check(v: Point):
    if v.x == 0 and v.y == 0:
        raise ZeroVector(f"angle argument of the zero vector is undefined: {v!r}")


def halfplane(v: Point) -> HalfPlane:
    _check(v)
    if v.y > 0 or (v.y == 0 and v.x > 0):
        return HalfPlane.H_MINUS
    return HalfPlane.H_PLUS


def _upper(x, y) -> bool:
    return y > 0 or (y == 0 and x > 0)


def less_xy(s, t, x, y) -> bool:
    """arg(s, t) < arg(x, y) for nonzero vectors given as raw coordinates."""
    u_minus = _upper(s, t)
    v_minus = _upper(x, y)
    if u_minus != v_minus:
        return u_minus
    return s * y - t * x > 0


def compare_xy(s, t, x, y) -> int:
    """Three-way comparison of arg(s, t) against arg(x, y).

    Equal arguments are detected by direction equivalence (zero cross
    product, positive dot product) rather than by two strict comparisons.
    """
    if s * y == t * x and s * x + t * y > 0:
        return EQ
    return LT if less_xy(s, t, x, y) else GT


def arg_less(u: Point, v: Point) -> bool:
    _check(u)
    _check(v)
    return less_xy(u.x, u.y, v.x, v.y)


def arg_compare(u: Point, v: Point) -> int:
    """Return LT (-1), EQ (0) or GT (1) comparing arg u with arg v."""
    _check(u)
    _check(v)
    return compare_xy(u.x, u.y, v.x, v.y)


def direction_equiv(u: Point, v: Point) -> bool:
    """True iff v = c*u for some c > 0."""
    _check(u)
    _check(v)
    return u.cross(v) == 0 and u.dot(v) > 0


def arg_approx(v: Point) -> float:
    """Floating-point angle argument in [0, 2*pi), via the arccos branch formula."""
    _check(v)
    x, y = float(v.x), float(v.y)
    r = math.hypot(x, y)
    a = math.acos(max(-1.0, min(1.0, x / r)))
    if halfplane(v) is HalfPlane.H_MINUS:
        return a
    a = 2 * math.pi - a
    return a if a < 2 * math.pi else math.nextafter(2 * math.pi, 0.0)


def edge_vectors(poly: Polygon) -> list:
    """Edge vectors V_{i+1} - V_i for i = 0..n-1 (with V_n = V_0).

    Raises NotLocallyOrdinary at the first zero edge vector.
    """
    verts = poly.vertices
    n = len(verts)
    out = []
    for i in range(n):
        e = verts[(i + 1) % n] - verts[i]
        if e.is_zero():
            raise NotLocallyOrdinary(i)
        out.append(e)
    return out


def edge_xy(poly: Polygon):
    """Integer edge-vector coordinates of a positive rescaling of ``poly``.

    Same contract as :func:`edge_vectors`, but returns two plain lists of
    ints for the linear-time deciders.
    """
    xs, ys = poly.integral_coords()
    n = len(xs)
    if n == 0:
        return [], []
    ex = [xs[i + 1] - xs[i] for i in range(n - 1)]
    ey = [ys[i + 1] - ys[i] for i in range(n - 1)]
    ex.append(xs[0] - xs[-1])
    ey.append(ys[0] - ys[-1])
    for i in range(n):
        if ex[i] == 0 and ey[i] == 0:
            raise NotLocallyOrdinary(i)
    return ex, ey
