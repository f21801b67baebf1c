"""Plain-text polygon files.

One vertex per line as two whitespace-separated scalars; each scalar is an
integer, a decimal literal (``-0.25``, ``1e3``) or a fraction ``p/q``. Blank
lines and lines starting with ``#`` are ignored. Writing uses integers and
``p/q`` only, so a read after a write reproduces the polygon exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .geom import Point, Polygon, scalar


def parse_scalar(token: str):
    try:
        return scalar(Fraction(token))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a number: {token!r}") from exc


def loads(text: str) -> Polygon:
    verts = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected 2 coordinates, got {len(parts)}")
        try:
            x, y = (parse_scalar(t) for t in parts)
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
        verts.append(Point._raw(x, y))
    return Polygon(verts)


def dumps(poly: Polygon, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend("# " + h for h in header.splitlines())
    lines.extend(f"{v.x} {v.y}" for v in poly.vertices)
    return "".join(line + "\n" for line in lines)


def load(path) -> Polygon:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(poly: Polygon, path, header: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(poly, header))
