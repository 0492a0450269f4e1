import logging
import math
from collections import deque
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..config import DEFAULT_TOLERANCES, SolverConfig, Tolerances
from ..forms import DirichletForm, FormDimensionError, ZeroFormError
from ..renorm import DegenerateImageError, RenormalizationOperator, Weights
from ..triples import FractalTriple

logger = logging.getLogger(__name__)

TRAJECTORY_LENGTH = 1000
DEGENERATING_STREAK = 100
RHO_MATCH_TOL = 1e-6


class SolveStatus(str, Enum):
    CONVERGED = "converged"
    MAX_ITER = "max_iter"
    DEGENERATING = "degenerating"
    DEGENERATE_IMAGE = "degenerate_image"


class EigenformVerdict(str, Enum):
    EIGENFORM = "eigenform"
    DEGENERATE_EIGENFORM = "degenerate_eigenform"
    NON_EIGENFORM = "non_eigenform"


@dataclass(frozen=True)
class TrajectoryStep:
    iteration: int
    scale: float
    min_coefficient: float
    change: float

    def to_dict(self) -> dict:
        return {
            "iteration": self.iteration,
            "scale": self.scale,
            "min_coefficient": self.min_coefficient,
            "change": self.change,
        }


@dataclass(frozen=True)
class EigenformResult:
    """
    Final state of the normalized iteration. `rho` and `residual` are
    measured at `form`; only a converged result is an eigenform.
    """
    form: DirichletForm
    rho: float
    residual: float
    iterations: int
    status: SolveStatus
    min_coefficient: float
    trajectory: tuple[TrajectoryStep, ...] = ()

    @property
    def converged(self) -> bool:
        return self.status is SolveStatus.CONVERGED

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "form": [float(c) for c in self.form.coeffs],
            "rho": self.rho,
            "residual": self.residual,
            "iterations": self.iterations,
            "min_coefficient": self.min_coefficient,
            "trajectory": [step.to_dict() for step in self.trajectory],
        }


@dataclass(frozen=True)
class EigenformCheck:
    """Residual of Lambda_r(E) = rho E and the verdict it supports."""
    rho: float
    residual: float
    ratios: tuple[float | None, ...]
    irreducible: bool
    verdict: EigenformVerdict

    @property
    def is_eigenform(self) -> bool:
        return self.verdict is EigenformVerdict.EIGENFORM

    @property
    def is_degenerate_eigenform(self) -> bool:
        return self.verdict is EigenformVerdict.DEGENERATE_EIGENFORM

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "rho": self.rho,
            "residual": self.residual,
            "ratios": list(self.ratios),
            "irreducible": self.irreducible,
        }


def _eigen_residual(operator: RenormalizationOperator, form: DirichletForm,
                    rho: float | None = None) -> tuple[float, float, DirichletForm]:
    """(rho, ||Lambda_r(E) - rho E||_inf, Lambda_r(E)); rho defaults to |Lambda_r(E)| / |E|."""
    image = operator.lambda_r(form)
    if rho is None:
        rho = image.norm / form.norm
    residual = float(np.abs(image.coeffs - rho * form.coeffs).max())
    return rho, residual, image


def limiting_boundary_form(form: DirichletForm, floor: float,
                           tolerances: Tolerances = DEFAULT_TOLERANCES) -> DirichletForm:
    """Drops coefficients below `floor` and renormalizes (a heuristic guess at the limit)."""
    coeffs = np.where(form.coeffs < floor, 0.0, form.coeffs)
    return DirichletForm(form.n_boundary, coeffs).normalize(tolerances)[1]


def _check(operator: RenormalizationOperator, form: DirichletForm, rho: float | None, residual_tol: float,
           tolerances: Tolerances) -> EigenformCheck:
    rho, residual, image = _eigen_residual(operator, form, rho)

    positive = form.positive_pairs(tolerances)
    ratios = tuple(
        float(image.coeffs[d] / form.coeffs[d]) if positive[d] else None for d in range(form.n_pairs)
    )
    irreducible = form.is_irreducible(tolerances)

    if residual > residual_tol * form.norm or rho <= tolerances.image_zero_tol:
        verdict = EigenformVerdict.NON_EIGENFORM
    elif irreducible:
        verdict = EigenformVerdict.EIGENFORM
    else:
        verdict = EigenformVerdict.DEGENERATE_EIGENFORM
    return EigenformCheck(rho=rho, residual=residual, ratios=ratios, irreducible=irreducible, verdict=verdict)


def _collapses(operator: RenormalizationOperator, form: DirichletForm, rho: float, config: SolverConfig,
               tolerances: Tolerances) -> bool:
    """
    True when the coefficients below `degeneration_threshold` can be dropped
    and what is left is a degenerate eigenform with the same eigenvalue.
    """
    if form.coeffs.min() >= config.degeneration_threshold:
        return False
    try:
        limit = limiting_boundary_form(form, config.degeneration_threshold, tolerances)
    except ZeroFormError:
        return False
    check = _check(operator, limit, None, config.residual_tol, tolerances)
    return check.is_degenerate_eigenform and math.isclose(check.rho, rho, rel_tol=RHO_MATCH_TOL)


def _start_form(triple: FractalTriple, config: SolverConfig, tolerances: Tolerances) -> DirichletForm:
    if isinstance(config.start, DirichletForm):
        if config.start.n_boundary != triple.n_boundary:
            raise FormDimensionError(
                f"Start form lives on {config.start.n_boundary} vertices, the triple has N = {triple.n_boundary}."
            )
        return config.start.normalize(tolerances)[1]
    return DirichletForm.uniform(triple.n_boundary)


def solve_eigenform(triple: FractalTriple, weights: Weights, config: SolverConfig | None = None,
                    tolerances: Tolerances = DEFAULT_TOLERANCES) -> EigenformResult:
    """
    Searches for a fixed point of the normalized map by the iteration
    E <- (1 - damping) E + damping Lambda~_r(E).

    The iteration stops when the sup-norm step is at most `tol` and the
    eigen-residual is at most `residual_tol`: an irreducible limit is
    `converged`, a reducible one `degenerating`. So is a limit that is
    numerically irreducible but whose coefficients below
    `degeneration_threshold` drop out to leave a degenerate eigenform with
    the same rho. A minimum coefficient
    below `degeneracy_floor` for DEGENERATING_STREAK consecutive steps
    also stops it as `degenerating`. A vanishing image ends the search
    with status `degenerate_image`.
    """
    config = config or SolverConfig()
    operator = RenormalizationOperator(triple, weights, tolerances)
    form = _start_form(triple, config, tolerances)
    theta = config.damping

    trajectory: deque[TrajectoryStep] = deque(maxlen=TRAJECTORY_LENGTH)
    streak = 0

    def result(status: SolveStatus, iterations: int, rho: float, residual: float) -> EigenformResult:
        logger.info(f"Solver stopped after {iterations} iterations: {status.value} (rho = {rho:.15g})")
        return EigenformResult(
            form=form,
            rho=rho,
            residual=residual,
            iterations=iterations,
            status=status,
            min_coefficient=float(form.coeffs.min()),
            trajectory=tuple(trajectory),
        )

    for iteration in range(1, config.max_iter + 1):
        try:
            scale, image = operator.normalized_lambda(form)
        except DegenerateImageError as e:
            logger.warning(f"Iteration {iteration}: {e}")
            return result(SolveStatus.DEGENERATE_IMAGE, iteration - 1, 0.0, float(np.abs(form.coeffs).max()))

        mixed = DirichletForm(form.n_boundary, (1.0 - theta) * form.coeffs + theta * image.coeffs)
        _, updated = mixed.normalize(tolerances)
        change = float(np.abs(updated.coeffs - form.coeffs).max())
        form = updated

        min_coefficient = float(form.coeffs.min())
        trajectory.append(TrajectoryStep(iteration, scale, min_coefficient, change))
        logger.debug(f"Iteration {iteration}: scale {scale:.15g}, change {change:.3e}, min {min_coefficient:.3e}")

        streak = streak + 1 if min_coefficient < config.degeneracy_floor else 0

        if change <= config.tol:
            try:
                rho, residual, _ = _eigen_residual(operator, form)
            except ZeroFormError:
                return result(SolveStatus.DEGENERATE_IMAGE, iteration, 0.0, float(np.abs(form.coeffs).max()))
            if residual <= config.residual_tol:
                status = SolveStatus.CONVERGED if form.is_irreducible(tolerances) else SolveStatus.DEGENERATING
                if status is SolveStatus.CONVERGED and _collapses(operator, form, rho, config, tolerances):
                    logger.warning(f"Iteration {iteration}: the limit sheds its small coefficients into a degenerate eigenform")
                    status = SolveStatus.DEGENERATING
                return result(status, iteration, rho, residual)

        if streak >= DEGENERATING_STREAK:
            rho, residual, _ = _eigen_residual(operator, form)
            return result(SolveStatus.DEGENERATING, iteration, rho, residual)

    rho, residual, _ = _eigen_residual(operator, form)
    return result(SolveStatus.MAX_ITER, config.max_iter, rho, residual)


def verify_eigenform(triple: FractalTriple, weights: Weights, form: DirichletForm, rho: float | None = None,
                     residual_tol: float = 1e-10, tolerances: Tolerances = DEFAULT_TOLERANCES) -> EigenformCheck:
    """
    Tests Lambda_r(E) = rho E. With rho omitted, rho = |Lambda_r(E)| / |E|.

    A form passing the test is an eigenform when irreducible and a
    degenerate eigenform when reducible (its kernel holds non-constant
    functions). A vanishing eigenvalue never passes.

    Raises:
        ZeroFormError: If |E| is zero.
    """
    if form.norm <= tolerances.zero_tol:
        raise ZeroFormError("An eigenform needs |E| > 0.")
    operator = RenormalizationOperator(triple, weights, tolerances)
    return _check(operator, form, rho, residual_tol, tolerances)
