from dataclasses import dataclass

import numpy as np

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..forms import DirichletForm
from .exceptions import AtCenterError, GeometryError

SLICE_TOL = 1e-9


def as_point(x) -> np.ndarray:
    """Coefficient vector of a form, or a copy of an array-like point of Z."""
    if isinstance(x, DirichletForm):
        return np.array(x.coeffs, dtype=float)
    point = np.array(x, dtype=float).reshape(-1)
    if point.size == 0 or not np.all(np.isfinite(point)):
        raise GeometryError("A point needs finitely many finite coordinates.")
    return point


def _on_slice(point: np.ndarray, name: str):
    if abs(point.sum() - 1.0) > SLICE_TOL:
        raise GeometryError(f"{name} is not on the slice |E| = 1 (sum {point.sum():.12g}).")


def _ray(reference, x, tolerances: Tolerances) -> tuple[np.ndarray, np.ndarray]:
    center, point = as_point(reference), as_point(x)
    if center.shape != point.shape:
        raise GeometryError(f"Points differ in dimension: {center.size} vs {point.size}.")
    _on_slice(center, "The reference point")
    _on_slice(point, "The point")
    direction = point - center
    if np.abs(direction).max() <= tolerances.ray_tol:
        raise AtCenterError("The point coincides with the reference point; the ray is undefined.")
    return center, direction


def project_to_boundary(reference, x, tolerances: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """
    p(x): the point where the ray from the interior reference point through
    x leaves the simplex. The first coordinate to reach zero is set to
    exactly zero.

    Raises:
        AtCenterError: If x equals the reference point.
        GeometryError: If the reference point is not interior.
    """
    center, direction = _ray(reference, x, tolerances)
    if np.any(center <= 0):
        raise GeometryError("The reference point must have every coordinate positive.")

    falling = np.flatnonzero(direction < 0)
    if falling.size == 0:
        raise AtCenterError("The ray never leaves the simplex.")
    steps = center[falling] / -direction[falling]
    hit = int(np.argmin(steps))

    projected = center + steps[hit] * direction
    projected[falling[hit]] = 0.0
    return projected


@dataclass(frozen=True)
class ExtMembership:
    """Whether y lies on the open ray beyond x, with the numbers behind it."""
    contained: bool
    t: float
    residual: float

    def __bool__(self) -> bool:
        return self.contained

    def to_dict(self) -> dict:
        return {"contained": self.contained, "t": self.t, "residual": self.residual}


def ext_contains(reference, x, y, tolerances: Tolerances = DEFAULT_TOLERANCES) -> ExtMembership:
    """
    Membership of y in Ext(x) = {E_ref + t (x - E_ref) : t > 1}.

    t is the least-squares ray parameter; y belongs when the sup-norm
    residual off the ray is at most ext_tol and t > 1 + ext_tol.

    Raises:
        AtCenterError: If x equals the reference point.
    """
    center, direction = _ray(reference, x, tolerances)
    offset = as_point(y) - center
    if offset.shape != direction.shape:
        raise GeometryError(f"Points differ in dimension: {offset.size} vs {direction.size}.")

    t = float(offset @ direction / (direction @ direction))
    residual = float(np.abs(offset - t * direction).max())
    contained = residual <= tolerances.ext_tol and t > 1.0 + tolerances.ext_tol
    return ExtMembership(contained=contained, t=t, residual=residual)
