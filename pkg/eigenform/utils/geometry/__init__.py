# eigenform/utils/geometry/__init__.py
from .exceptions import GeometryError, AtCenterError, ProbeError
from .simplex import ExtMembership, as_point, ext_contains, project_to_boundary
from .probe import (
    ProbeReport, ProjectionBoundReport, anti_attracting_probe, projection_bound_check, projection_ratio,
    sample_neighbourhood,
)

__all__ = [
    "GeometryError", "AtCenterError", "ProbeError",
    "ExtMembership", "as_point", "ext_contains", "project_to_boundary",
    "ProbeReport", "ProjectionBoundReport", "anti_attracting_probe", "projection_bound_check", "projection_ratio",
    "sample_neighbourhood",
]
