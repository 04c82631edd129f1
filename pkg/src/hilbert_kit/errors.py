"""Exception types raised by the geometry kernel."""


class GeometryError(ValueError):
    """Base class for violated geometric preconditions."""


class OriginNotInterior(GeometryError):
    pass


class ZeroDirection(GeometryError):
    pass


class CoincidentPoints(GeometryError):
    pass


class DegenerateHull(GeometryError):
    pass


class DegeneratePolygon(GeometryError):
    """Fewer than three distinct, non-collinear vertices."""


class NonConvex(GeometryError):
    pass


class NonpositiveRadius(GeometryError):
    pass


class VertexCoincidence(GeometryError):
    pass


class EmptyInput(GeometryError):
    pass


class DuplicatePoints(GeometryError):
    pass
