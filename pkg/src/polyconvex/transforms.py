"""Vertex-wise polygon transforms with exact coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonPositiveScale, NotARotation, SingularMap
from .geom import Point, Polygon, as_point, scalar


def cyclic_shift(poly: Polygon, k: int) -> Polygon:
    """(V_k, ..., V_{n-1}, V_0, ..., V_{k-1}); k is taken modulo n."""
    v = poly.vertices
    if not v:
        return Polygon()
    k %= len(v)
    return Polygon(v[k:] + v[:k])


def swap_vertices(poly: Polygon, i: int, j: int) -> Polygon:
    v = list(poly.vertices)
    v[i], v[j] = v[j], v[i]
    return Polygon(v)


@dataclass(frozen=True)
class AffineMap:
    """v -> M v + t with M = ((m11, m12), (m21, m22))."""

    m11: object = 1
    m12: object = 0
    m21: object = 0
    m22: object = 1
    t1: object = 0
    t2: object = 0

    def __post_init__(self):
        for name in ("m11", "m12", "m21", "m22", "t1", "t2"):
            object.__setattr__(self, name, scalar(getattr(self, name)))

    @property
    def det(self):
        return scalar(self.m11 * self.m22 - self.m12 * self.m21)

    def is_singular(self) -> bool:
        return self.det == 0

    def __call__(self, p: Point) -> Point:
        return Point(self.m11 * p.x + self.m12 * p.y + self.t1, self.m21 * p.x + self.m22 * p.y + self.t2)

    @classmethod
    def rotation(cls, c, s) -> "AffineMap":
        c, s = scalar(c), scalar(s)
        if c * c + s * s != 1:
            raise NotARotation(f"c^2 + s^2 = {c * c + s * s}, expected 1")
        return cls(c, -s, s, c)


def pythagorean_rotation(t) -> tuple:
    """Rational point (c, s) on the unit circle: ((1 - t^2), 2t) / (1 + t^2)."""
    t = Fraction(t)
    d = 1 + t * t
    return scalar((1 - t * t) / d), scalar(2 * t / d)


def affine(poly: Polygon, m: AffineMap) -> Polygon:
    if m.is_singular():
        raise SingularMap(f"map has zero determinant: {m}")
    return Polygon(m(v) for v in poly.vertices)


def reflect(poly: Polygon) -> Polygon:
    """Mirror in the x-axis: (x, y) -> (x, -y)."""
    return Polygon(Point(v.x, -v.y) for v in poly.vertices)


def rotate_rational(poly: Polygon, c, s) -> Polygon:
    return affine(poly, AffineMap.rotation(c, s))


def scale(poly: Polygon, lam) -> Polygon:
    lam = scalar(lam)
    if lam <= 0:
        raise NonPositiveScale(f"homothety factor must be positive, got {lam}")
    return Polygon(v * lam for v in poly.vertices)


def translate(poly: Polygon, t) -> Polygon:
    t = as_point(t)
    return Polygon(v + t for v in poly.vertices)
