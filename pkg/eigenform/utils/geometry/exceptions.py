class GeometryError(Exception):
    """Base exception for simplex geometry errors."""
    pass


class AtCenterError(GeometryError):
    """The point coincides with the reference point, so no ray is defined."""
    pass


class ProbeError(GeometryError):
    """The probe was misconfigured or could not draw enough samples."""
    pass
