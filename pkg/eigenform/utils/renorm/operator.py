import logging

import numpy as np

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..forms import (
    DirichletForm, FormDimensionError, FormKernel, QuadraticFormMatrix, RayleighBounds, ZeroFormError,
    coefficients_from_form, rayleigh_bounds,
)
from ..triples import FractalTriple
from .boundary import BoundaryClass, Stratum
from .constrained import ConstrainedForm, constrained_trace
from .elimination import schur_complement
from .exceptions import DegenerateImageError, MarkovViolationError, WeightsError
from .weights import Weights

logger = logging.getLogger(__name__)


def trace_to_boundary(q: QuadraticFormMatrix, triple: FractalTriple,
                      tolerances: Tolerances = DEFAULT_TOLERANCES) -> QuadraticFormMatrix:
    """
    Restriction of a form on V(1) to V(0): the infimum of q over all
    extensions of u, which is the Schur complement onto the boundary block.
    """
    if q.vertex_count != triple.n_total:
        raise FormDimensionError(f"Expected a form on {triple.n_total} vertices, got {q.vertex_count}.")
    return QuadraticFormMatrix(schur_complement(q.matrix, triple.n_boundary, tolerances))


class RenormalizationOperator:
    """
    Lambda_r for a fixed triple and weight vector, plus the operations
    built on it (normalization, strata, ratio bounds).
    """
    def __init__(self, triple: FractalTriple, weights: Weights, tolerances: Tolerances = DEFAULT_TOLERANCES):
        if len(weights) != triple.n_cells:
            raise WeightsError(f"Expected {triple.n_cells} weights (one per cell), got {len(weights)}.")
        self.triple = triple
        self.weights = weights
        self.tolerances = tolerances

        edges = np.array(triple.cell_edge_set(), dtype=int)  # k x #J x 2
        k, n_pairs, _ = edges.shape
        self._cell = np.repeat(np.arange(k), n_pairs)
        self._pair = np.tile(np.arange(n_pairs), k)
        self._head = edges[:, :, 0].reshape(-1)
        self._tail = edges[:, :, 1].reshape(-1)

    def _check_form(self, form: DirichletForm):
        if form.n_boundary != self.triple.n_boundary:
            raise FormDimensionError(
                f"Form lives on {form.n_boundary} vertices, the triple has N = {self.triple.n_boundary}."
            )

    def assemble_s1(self, form: DirichletForm) -> QuadraticFormMatrix:
        """S_{1,r}(E)(v) = sum_i r_i E(v o psi_i) as a Laplacian on V(1)."""
        self._check_form(form)
        m = self.triple.n_total
        conductance = self.weights.as_array()[self._cell] * form.coeffs[self._pair]
        q = np.zeros((m, m))
        np.add.at(q, (self._head, self._tail), -conductance)
        np.add.at(q, (self._tail, self._head), -conductance)
        np.add.at(q, (self._head, self._head), conductance)
        np.add.at(q, (self._tail, self._tail), conductance)
        return QuadraticFormMatrix(q)

    def trace(self, form: DirichletForm) -> QuadraticFormMatrix:
        return trace_to_boundary(self.assemble_s1(form), self.triple, self.tolerances)

    def extract(self, form: DirichletForm) -> DirichletForm:
        """Coefficients of the trace before any clamping (may be slightly negative)."""
        reduced = self.trace(form)
        return coefficients_from_form(reduced, self.triple.n_boundary)

    def _markov_threshold(self, form: DirichletForm) -> float:
        scale = abs(form.norm) * max(self.weights.values)
        return self.tolerances.markov_tol * (scale if scale > 0 else 1.0)

    def lambda_r(self, form: DirichletForm) -> DirichletForm:
        """
        Lambda_r(E). Tiny negative coefficients from rounding are clamped to
        zero; anything below -markov_tol (scaled by |E| max r) is an error.

        Raises:
            MarkovViolationError: If the trace is not a Dirichlet form.
        """
        raw = self.extract(form)
        worst = float(raw.coeffs.min(initial=0.0))
        if worst < -self._markov_threshold(form):
            raise MarkovViolationError(
                f"Trace coefficient {worst:.3e} is negative beyond markov_tol; the elimination is unreliable."
            )
        return DirichletForm(raw.n_boundary, np.maximum(raw.coeffs, 0.0))

    def normalized_lambda(self, form: DirichletForm) -> tuple[float, DirichletForm]:
        """
        (|Lambda_r(E)|, Lambda_r(E) / |Lambda_r(E)|).

        Raises:
            ZeroFormError: If |E| is zero.
            DegenerateImageError: If |Lambda_r(E)| <= image_zero_tol * |E|.
        """
        if form.norm <= self.tolerances.zero_tol:
            raise ZeroFormError("The normalized map needs |E| > 0.")
        image = self.lambda_r(form)
        scale = image.norm
        if scale <= self.tolerances.image_zero_tol * form.norm:
            raise DegenerateImageError(f"|Lambda_r(E)| = {scale:.3e}; the normalized map is undefined here.")
        _, normalized = image.normalize(self.tolerances)
        return scale, normalized

    def classify(self, form: DirichletForm, cross_check: Weights | None = None) -> BoundaryClass:
        """
        Stratum D1..D4 of a normalized form at the operator's weights. With
        `cross_check`, |Lambda_r'(E)| at the second weights is recorded and
        compared for reducible forms.
        """
        self._check_form(form)
        if not form.is_normalized(1e-9):
            raise FormDimensionError(f"classify expects |E| = 1, got {form.norm!r}.")
        components = tuple(form.positivity_graph_components(self.tolerances))
        image_norm = self.lambda_r(form).norm

        if np.all(form.positive_pairs(self.tolerances)):
            stratum = Stratum.D1
        elif len(components) == 1:
            stratum = Stratum.D2
        elif image_norm > self.tolerances.image_zero_tol:
            stratum = Stratum.D3
        else:
            stratum = Stratum.D4

        other_norm = agrees = None
        if cross_check is not None:
            other = RenormalizationOperator(self.triple, cross_check, self.tolerances)
            other_norm = other.lambda_r(form).norm
            if stratum in (Stratum.D3, Stratum.D4):
                agrees = (other_norm > self.tolerances.image_zero_tol) == (stratum is Stratum.D3)
                if not agrees:
                    logger.warning("D3/D4 verdict changes between the two weight vectors.")

        return BoundaryClass(
            stratum=stratum,
            components=components,
            image_norm=image_norm,
            min_coefficient=float(form.coeffs.min()),
            cross_check_image_norm=other_norm,
            cross_check_agrees=agrees,
        )

    def ratio_bounds(self, form: DirichletForm) -> RayleighBounds:
        """Extremal ratios of Lambda_r(E) against E over non-constant u."""
        return rayleigh_bounds(self.lambda_r(form).laplacian(), form.laplacian(), tolerances=self.tolerances)

    def constrained_form(self, form: DirichletForm, kernel: FormKernel) -> ConstrainedForm:
        """Lambda_{r,E-bar}(E) on the kernel of E-bar (see constrained_trace)."""
        return constrained_trace(self.assemble_s1(form), self.triple, kernel, self.tolerances)


def assemble_s1(triple: FractalTriple, weights: Weights, form: DirichletForm) -> QuadraticFormMatrix:
    return RenormalizationOperator(triple, weights).assemble_s1(form)


def lambda_r(triple: FractalTriple, weights: Weights, form: DirichletForm,
             tolerances: Tolerances = DEFAULT_TOLERANCES) -> DirichletForm:
    return RenormalizationOperator(triple, weights, tolerances).lambda_r(form)


def normalized_lambda(triple: FractalTriple, weights: Weights, form: DirichletForm,
                      tolerances: Tolerances = DEFAULT_TOLERANCES) -> tuple[float, DirichletForm]:
    return RenormalizationOperator(triple, weights, tolerances).normalized_lambda(form)


def classify(triple: FractalTriple, weights: Weights, form: DirichletForm, cross_check: Weights | None = None,
             tolerances: Tolerances = DEFAULT_TOLERANCES) -> BoundaryClass:
    return RenormalizationOperator(triple, weights, tolerances).classify(form, cross_check)
