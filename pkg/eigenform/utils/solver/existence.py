import logging
from dataclasses import dataclass, field
from enum import Enum

from ..config import DEFAULT_TOLERANCES, SolverConfig, Tolerances
from ..forms import DirichletForm, ZeroFormError
from ..renorm import BoundaryClass, RenormalizationOperator, Stratum, Weights
from ..triples import FractalTriple
from .eigen import (
    EigenformCheck, EigenformResult, SolveStatus, limiting_boundary_form, solve_eigenform, verify_eigenform,
)
from .repulsing import RepulsingReport, repulsing_check

logger = logging.getLogger(__name__)


class ExistenceVerdict(str, Enum):
    EIGENFORM_FOUND = "eigenform_found"
    DEGENERATE_REPULSING = "degenerate_repulsing"
    DEGENERATE_NOT_REPULSING = "degenerate_not_repulsing"
    DEGENERATE_UNVERIFIED = "degenerate_unverified"
    INCONCLUSIVE = "inconclusive"


@dataclass
class ExistenceReport:
    """What one solver trajectory says about existence of an eigenform."""
    verdict: ExistenceVerdict
    result: EigenformResult
    limit_form: DirichletForm | None = None
    check: EigenformCheck | None = None
    boundary: BoundaryClass | None = None
    repulsing: RepulsingReport | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "result": self.result.to_dict(),
            "limit_form": None if self.limit_form is None else [float(c) for c in self.limit_form.coeffs],
            "check": None if self.check is None else self.check.to_dict(),
            "boundary": None if self.boundary is None else self.boundary.to_dict(),
            "repulsing": None if self.repulsing is None else self.repulsing.to_dict(),
            "notes": list(self.notes),
        }


def existence_report(triple: FractalTriple, weights: Weights, config: SolverConfig | None = None,
                     reference: DirichletForm | None = None,
                     tolerances: Tolerances = DEFAULT_TOLERANCES) -> ExistenceReport:
    """
    Runs the solver and, when the trajectory runs into the boundary, checks
    the limiting form against the hypothesis "every degenerate eigenform in
    D3 is repulsing". Only the degenerate eigenform this trajectory reaches
    is examined; others may exist.
    """
    config = config or SolverConfig()
    result = solve_eigenform(triple, weights, config, tolerances)
    report = ExistenceReport(verdict=ExistenceVerdict.INCONCLUSIVE, result=result)

    if result.status is SolveStatus.CONVERGED:
        report.verdict = ExistenceVerdict.EIGENFORM_FOUND
        report.notes.append(f"Irreducible eigenform found with rho = {result.rho!r}.")
        return report
    if result.status is SolveStatus.MAX_ITER:
        report.notes.append(f"No convergence within {result.iterations} iterations.")
        return report

    report.notes.append(f"The trajectory reached the boundary ({result.status.value}).")
    try:
        floor = max(config.degeneracy_floor, config.degeneration_threshold)
        limit = limiting_boundary_form(result.form, floor, tolerances)
    except ZeroFormError:
        report.verdict = ExistenceVerdict.DEGENERATE_UNVERIFIED
        report.notes.append("The limiting form vanishes after dropping small coefficients.")
        return report
    report.limit_form = limit

    operator = RenormalizationOperator(triple, weights, tolerances)
    report.boundary = operator.classify(limit)
    report.check = verify_eigenform(triple, weights, limit, residual_tol=config.residual_tol, tolerances=tolerances)

    if report.boundary.stratum is not Stratum.D3:
        report.verdict = ExistenceVerdict.DEGENERATE_UNVERIFIED
        report.notes.append(f"The limiting form lies in {report.boundary.stratum.value}, not D3.")
        return report
    if not report.check.is_degenerate_eigenform:
        report.verdict = ExistenceVerdict.DEGENERATE_UNVERIFIED
        report.notes.append(f"The limiting form is not a degenerate eigenform (residual {report.check.residual:.3e}).")
        return report

    report.repulsing = repulsing_check(
        triple, weights, limit, reference, residual_tol=config.residual_tol, tolerances=tolerances
    )
    if report.repulsing.repulsing_strict:
        report.verdict = ExistenceVerdict.DEGENERATE_REPULSING
        report.notes.append("The degenerate eigenform is repulsing; it does not block existence.")
    else:
        report.verdict = ExistenceVerdict.DEGENERATE_NOT_REPULSING
        report.notes.append("The degenerate eigenform is not strictly repulsing; the existence hypothesis fails here.")
    logger.info(f"Existence verdict: {report.verdict.value}")
    return report
