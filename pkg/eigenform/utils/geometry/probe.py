import logging
from dataclasses import dataclass

import numpy as np

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..forms import DirichletForm
from ..renorm import DegenerateImageError, RenormalizationOperator, Weights
from ..triples import FractalTriple
from .exceptions import AtCenterError, ProbeError
from .simplex import as_point, ext_contains, project_to_boundary

logger = logging.getLogger(__name__)

MAX_DRAWS = 1_000_000
BATCH_SIZE = 4096
PROJECTION_FACTOR = 2.0


@dataclass(frozen=True)
class ProbeReport:
    """
    Outcome of sampling the map near a boundary point. Zero hits is evidence
    of the anti-attracting property, never a proof of it.
    """
    hits: int
    samples: int
    worst_t: float | None
    degenerate_images: int
    seed: int

    @property
    def clean(self) -> bool:
        return self.hits == 0

    def to_dict(self) -> dict:
        return {
            "hits": self.hits,
            "samples": self.samples,
            "worst_t": self.worst_t,
            "degenerate_images": self.degenerate_images,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class ProjectionBoundReport:
    """Largest p(E)_d / E_d seen near a boundary form, and how often it passed PROJECTION_FACTOR."""
    samples: int
    worst_ratio: float
    violations: int
    seed: int

    @property
    def holds(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "worst_ratio": self.worst_ratio,
            "violations": self.violations,
            "seed": self.seed,
        }


def sample_neighbourhood(center: np.ndarray, radius: float, samples: int,
                         rng: np.random.Generator) -> np.ndarray:
    """
    Uniform points of the open simplex within sup-distance `radius` of
    `center`. All coordinates but the largest one of `center` are drawn in
    the box; that one is solved from the coordinate sum and the draw is
    rejected if it leaves the box or the simplex.

    Raises:
        ProbeError: If MAX_DRAWS draws do not yield enough points.
    """
    n = center.size
    solved = int(np.argmax(center))
    free = np.delete(np.arange(n), solved)
    low = np.maximum(center[free] - radius, 0.0)
    high = np.minimum(center[free] + radius, 1.0)

    accepted, drawn = [], 0
    while sum(len(batch) for batch in accepted) < samples:
        if drawn >= MAX_DRAWS:
            raise ProbeError(f"Only {sum(len(b) for b in accepted)} of {samples} points accepted in {drawn} draws.")
        size = min(BATCH_SIZE, MAX_DRAWS - drawn)
        drawn += size
        points = np.empty((size, n))
        points[:, free] = rng.uniform(low, high, size=(size, free.size))
        points[:, solved] = 1.0 - points[:, free].sum(axis=1)
        keep = (
            np.all(points > 0, axis=1)
            & (np.abs(points[:, solved] - center[solved]) <= radius)
        )
        accepted.append(points[keep])
    return np.concatenate(accepted)[:samples]


def _boundary_start(boundary_form: DirichletForm, radius: float, samples: int, tolerances: Tolerances):
    if samples < 1:
        raise ProbeError("The probe needs at least one sample.")
    if not radius > 0:
        raise ProbeError("The probe radius must be positive.")
    if not boundary_form.is_normalized(1e-9):
        raise ProbeError(f"The boundary form must satisfy |E| = 1, got {boundary_form.norm!r}.")
    if np.all(boundary_form.positive_pairs(tolerances)):
        raise ProbeError("The form is interior to the simplex, not on its boundary.")


def anti_attracting_probe(triple: FractalTriple, weights: Weights, boundary_form: DirichletForm,
                          reference: DirichletForm | None = None, radius: float = 1e-2, samples: int = 200,
                          seed: int = 0, tolerances: Tolerances = DEFAULT_TOLERANCES) -> ProbeReport:
    """
    Draws `samples` interior forms near `boundary_form` and counts those
    whose normalized image lies in their Ext set with respect to
    `reference` (the barycenter by default).

    A vanishing image is counted in `degenerate_images` and the probe
    moves on.

    Raises:
        ProbeError: If samples < 1, radius <= 0, or the start is not a
            normalized boundary form.
    """
    _boundary_start(boundary_form, radius, samples, tolerances)
    if reference is None:
        reference = DirichletForm.uniform(boundary_form.n_boundary)

    operator = RenormalizationOperator(triple, weights, tolerances)
    rng = np.random.default_rng(seed)
    points = sample_neighbourhood(np.asarray(boundary_form.coeffs), radius, samples, rng)

    hits = degenerate = 0
    worst_t = None
    for point in points:
        form = DirichletForm(boundary_form.n_boundary, point)
        try:
            _, image = operator.normalized_lambda(form)
        except DegenerateImageError:
            degenerate += 1
            continue
        membership = ext_contains(reference, form, image, tolerances)
        if membership:
            hits += 1
            logger.debug(f"Ext hit at t = {membership.t:.6g}")
        if worst_t is None or membership.t > worst_t:
            worst_t = membership.t

    logger.info(f"Probe: {hits} hits in {samples} samples ({degenerate} degenerate images)")
    return ProbeReport(hits=hits, samples=samples, worst_t=worst_t, degenerate_images=degenerate, seed=seed)


def projection_ratio(reference, x, tolerances: Tolerances = DEFAULT_TOLERANCES) -> float:
    """max_d p(x)_d / x_d over the positive coordinates of x."""
    point = as_point(x)
    projected = project_to_boundary(reference, point, tolerances)
    positive = point > 0
    return float(np.max(projected[positive] / point[positive]))


def projection_bound_check(boundary_form: DirichletForm, reference: DirichletForm | None = None,
                           radius: float = 1e-2, samples: int = 200, seed: int = 0,
                           tolerances: Tolerances = DEFAULT_TOLERANCES) -> ProjectionBoundReport:
    """
    Draws interior forms E near `boundary_form` and tests p(E)_d <= 2 E_d
    for every pair d, p being the projection from `reference` onto the
    boundary. The bound holds on a small enough neighbourhood of any
    boundary form; far from the boundary it fails.

    Raises:
        ProbeError: If samples < 1, radius <= 0, or the start is not a
            normalized boundary form.
    """
    _boundary_start(boundary_form, radius, samples, tolerances)
    if reference is None:
        reference = DirichletForm.uniform(boundary_form.n_boundary)

    rng = np.random.default_rng(seed)
    points = sample_neighbourhood(np.asarray(boundary_form.coeffs), radius, samples, rng)

    worst, violations = 0.0, 0
    for point in points:
        try:
            ratio = projection_ratio(reference, point, tolerances)
        except AtCenterError:
            continue
        if ratio > PROJECTION_FACTOR:
            violations += 1
        worst = max(worst, ratio)

    logger.info(f"Projection bound: worst ratio {worst:.6g}, {violations} violations in {samples} samples")
    return ProjectionBoundReport(samples=samples, worst_ratio=worst, violations=violations, seed=seed)
