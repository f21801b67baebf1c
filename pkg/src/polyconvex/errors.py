"""Exception types raised by polyconvex."""


class GeometryError(Exception):
    """Base class for all polyconvex errors."""


class ZeroVector(GeometryError, ValueError):
    """The angle argument is undefined for the zero vector."""


class NotLocallyOrdinary(GeometryError, ValueError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"vertices {index} and its successor coincide")


class EmptyPolygon(GeometryError, ValueError):
    pass


class TooFewVertices(GeometryError, ValueError):
    def __init__(self, n, minimum):
        self.n = n
        self.minimum = minimum
        super().__init__(f"need at least {minimum} vertices, got {n}")


class NotARotation(GeometryError, ValueError):
    pass


class NonPositiveScale(GeometryError, ValueError):
    pass


class SingularMap(GeometryError, ValueError):
    pass


class GenerationFailed(GeometryError, RuntimeError):
    pass


class ParseError(GeometryError, ValueError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")
