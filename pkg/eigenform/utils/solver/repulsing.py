import logging
import math
from dataclasses import dataclass

import numpy as np

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..forms import DenominatorDegenerateError, DirichletForm, rayleigh_bounds
from ..geometry import ProbeError, sample_neighbourhood
from ..renorm import RenormalizationOperator, Stratum, Weights, eta
from ..triples import FractalTriple
from .eigen import EigenformCheck, verify_eigenform
from .exceptions import NotD3Error, NotDegenerateEigenformError, NotInteriorError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RepulsingReport:
    """
    mu is the best constant with Lambda_{r,E-bar}(E_ref) >= mu E_ref on the
    non-constant kernel functions of E-bar; +inf when no feasible one exists.
    """
    rho: float
    mu: float
    infeasible_directions: int
    repulsing_nonstrict: bool
    repulsing_strict: bool
    check_tol: float

    def to_dict(self) -> dict:
        return {
            "rho": self.rho,
            "mu": "inf" if math.isinf(self.mu) else self.mu,
            "infeasible_directions": self.infeasible_directions,
            "repulsing_nonstrict": self.repulsing_nonstrict,
            "repulsing_strict": self.repulsing_strict,
            "check_tol": self.check_tol,
        }


@dataclass(frozen=True)
class KernelDominationReport:
    """
    Smallest ratio Lambda_r(E)(u) / (eta_E Lambda_{r,E-bar}(E_ref)(u)) seen
    over interior samples E near E-bar and kernel functions u of E-bar.
    eta_E is the smallest E / E_ref on the kernel. Close enough to E-bar the
    ratio exceeds every alpha < 1.
    """
    samples: int
    worst_ratio: float
    violations: int
    alpha: float
    radius: float
    seed: int

    @property
    def holds(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "worst_ratio": "inf" if math.isinf(self.worst_ratio) else self.worst_ratio,
            "violations": self.violations,
            "alpha": self.alpha,
            "radius": self.radius,
            "seed": self.seed,
        }


def _degenerate_d3(triple: FractalTriple, weights: Weights, degenerate: DirichletForm, residual_tol: float,
                   tolerances: Tolerances) -> tuple[RenormalizationOperator, DirichletForm, EigenformCheck]:
    _, form = degenerate.normalize(tolerances)
    if form.is_irreducible(tolerances):
        raise NotDegenerateEigenformError("The form is irreducible; a degenerate eigenform has a non-trivial kernel.")

    operator = RenormalizationOperator(triple, weights, tolerances)
    boundary = operator.classify(form)
    if boundary.stratum is not Stratum.D3:
        raise NotD3Error(f"The form lies in {boundary.stratum.value}, not D3.")

    check = verify_eigenform(triple, weights, form, residual_tol=residual_tol, tolerances=tolerances)
    if not check.is_degenerate_eigenform:
        raise NotDegenerateEigenformError(
            f"Lambda_r(E) = rho E fails: residual {check.residual:.3e} at rho = {check.rho:.15g}."
        )
    return operator, form, check


def _interior_reference(triple: FractalTriple, reference: DirichletForm | None,
                        tolerances: Tolerances) -> DirichletForm:
    if reference is None:
        return DirichletForm.uniform(triple.n_boundary)
    if reference.n_boundary != triple.n_boundary or not np.all(reference.positive_pairs(tolerances)):
        raise NotInteriorError("The reference form must lie in D1: every coefficient positive.")
    return reference


def repulsing_check(triple: FractalTriple, weights: Weights, degenerate: DirichletForm,
                    reference: DirichletForm | None = None, check_tol: float | None = None,
                    residual_tol: float = 1e-10, tolerances: Tolerances = DEFAULT_TOLERANCES) -> RepulsingReport:
    """
    Decides whether a degenerate eigenform in D3 is repulsing: mu >= rho.
    Both verdicts are reported; the strict one (mu >= rho + check_tol) is
    what the existence argument needs.

    Raises:
        NotDegenerateEigenformError: If the form is irreducible or fails the
            eigenform equation.
        NotD3Error: If the form lies in D4.
        NotInteriorError: If the reference form is not in D1.
    """
    check_tol = tolerances.check_tol if check_tol is None else check_tol
    operator, form, check = _degenerate_d3(triple, weights, degenerate, residual_tol, tolerances)
    reference = _interior_reference(triple, reference, tolerances)

    constrained = operator.constrained_form(reference, form.kernel_basis(tolerances))
    try:
        bounds = rayleigh_bounds(
            constrained.lifted, reference.laplacian(), constrained.feasible_subspace(), tolerances
        )
        mu = bounds.min_ratio
    except DenominatorDegenerateError:
        logger.info("No feasible non-constant kernel direction; mu is +inf.")
        mu = math.inf

    rho = check.rho
    logger.info(f"Repulsing check: rho = {rho:.15g}, mu = {mu:.15g}")
    return RepulsingReport(
        rho=rho,
        mu=mu,
        infeasible_directions=constrained.infeasible_directions,
        repulsing_nonstrict=mu >= rho - check_tol,
        repulsing_strict=mu >= rho + check_tol,
        check_tol=check_tol,
    )


def kernel_domination_check(triple: FractalTriple, weights: Weights, degenerate: DirichletForm,
                            reference: DirichletForm | None = None, alpha: float = 0.9, radius: float = 1e-3,
                            samples: int = 100, seed: int = 0, residual_tol: float = 1e-10,
                            tolerances: Tolerances = DEFAULT_TOLERANCES) -> KernelDominationReport:
    """
    Samples interior forms E within `radius` of a degenerate eigenform in D3
    and tests Lambda_r(E)(u) >= alpha eta_E Lambda_{r,E-bar}(E_ref)(u) on its
    kernel. A sample whose worst ratio falls below `alpha` is a violation.

    Raises:
        ProbeError: If samples < 1, radius <= 0 or alpha is not in (0, 1).
        NotDegenerateEigenformError, NotD3Error, NotInteriorError: As for
            `repulsing_check`.
    """
    if samples < 1:
        raise ProbeError("The check needs at least one sample.")
    if not radius > 0:
        raise ProbeError("The sampling radius must be positive.")
    if not 0.0 < alpha < 1.0:
        raise ProbeError(f"alpha must lie in (0, 1), got {alpha}.")

    operator, form, _ = _degenerate_d3(triple, weights, degenerate, residual_tol, tolerances)
    reference = _interior_reference(triple, reference, tolerances)
    kernel = form.kernel_basis(tolerances)
    constrained = operator.constrained_form(reference, kernel)
    subspace = constrained.feasible_subspace()

    rng = np.random.default_rng(seed)
    points = sample_neighbourhood(np.asarray(form.coeffs), radius, samples, rng)

    worst, violations = math.inf, 0
    for point in points:
        sample = DirichletForm(form.n_boundary, point)
        eta_min = eta(sample, reference, kernel, tolerances).eta_min
        try:
            bounds = rayleigh_bounds(operator.lambda_r(sample).laplacian(), constrained.lifted, subspace, tolerances)
        except DenominatorDegenerateError:
            logger.info("No feasible non-constant kernel direction; the inequality holds vacuously.")
            break
        ratio = bounds.min_ratio / eta_min
        if ratio < alpha:
            violations += 1
            logger.debug(f"Kernel domination fails: ratio {ratio:.6g} < {alpha}")
        worst = min(worst, ratio)

    logger.info(f"Kernel domination: worst ratio {worst:.6g}, {violations} violations in {samples} samples")
    return KernelDominationReport(
        samples=samples, worst_ratio=worst, violations=violations, alpha=alpha, radius=radius, seed=seed,
    )
