import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

import networkx as nx
import numpy as np

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..triples.triple import PairIndex
from .exceptions import FormError, FormDimensionError, ZeroFormError, NotIrreducibleError
from .quadratic import QuadraticFormMatrix, rayleigh_bounds


@dataclass(frozen=True, eq=False)
class DirichletForm:
    """
    E(u) = sum over pairs d = {j1, j2} of E_d (u_j1 - u_j2)^2, stored as the
    coefficient vector in lexicographic pair order.

    The constructor only checks shape and finiteness. Membership in D
    (nonnegative coefficients) is a predicate, because intermediate results
    such as raw polarization output may carry tiny negative values.
    """
    n_boundary: int
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=float).reshape(-1)
        expected = self.n_boundary * (self.n_boundary - 1) // 2
        if self.n_boundary < 2 or coeffs.shape != (expected,):
            raise FormDimensionError(
                f"A form on {self.n_boundary} vertices needs {expected} coefficients, got {coeffs.size}."
            )
        if not np.all(np.isfinite(coeffs)):
            raise FormError("Coefficients must be finite.")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, n_boundary: int, coeffs) -> "DirichletForm":
        """Builds a form and insists on membership in D."""
        form = cls(n_boundary, coeffs)
        if np.any(form.coeffs < 0):
            raise FormError("Coefficients of a Dirichlet form must be nonnegative.")
        return form

    @classmethod
    def uniform(cls, n_boundary: int) -> "DirichletForm":
        """Barycenter of the normalized simplex: every coefficient 1/#J."""
        n_pairs = n_boundary * (n_boundary - 1) // 2
        return cls(n_boundary, np.full(n_pairs, 1.0 / n_pairs))

    @classmethod
    def zero(cls, n_boundary: int) -> "DirichletForm":
        return cls(n_boundary, np.zeros(n_boundary * (n_boundary - 1) // 2))

    @cached_property
    def pair_index(self) -> PairIndex:
        return PairIndex(self.n_boundary)

    @property
    def n_pairs(self) -> int:
        return self.coeffs.size

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DirichletForm)
            and self.n_boundary == other.n_boundary
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __mul__(self, factor: float) -> "DirichletForm":
        return DirichletForm(self.n_boundary, factor * self.coeffs)

    __rmul__ = __mul__

    def __call__(self, u) -> float:
        return self.eval(u)

    def eval(self, u) -> float:
        """Direct sum of E_d (u_j1 - u_j2)^2."""
        u = np.asarray(u, dtype=float)
        if u.shape != (self.n_boundary,):
            raise FormDimensionError(f"Expected a vector of length {self.n_boundary}, got shape {u.shape}.")
        pairs = np.array(self.pair_index.pairs)
        diffs = u[pairs[:, 0]] - u[pairs[:, 1]]
        return float(np.sum(self.coeffs * diffs * diffs))

    def laplacian(self) -> QuadraticFormMatrix:
        """Conductance Laplacian: -E_d off the diagonal, zero row sums."""
        q = np.zeros((self.n_boundary, self.n_boundary))
        for d, (j1, j2) in enumerate(self.pair_index):
            q[j1, j2] = q[j2, j1] = -self.coeffs[d]
        np.fill_diagonal(q, -q.sum(axis=1))
        return QuadraticFormMatrix(q)

    @property
    def norm(self) -> float:
        """|E|, the sum of the coefficients."""
        return float(self.coeffs.sum())

    def is_dirichlet(self) -> bool:
        """Membership in D."""
        return bool(np.all(self.coeffs >= 0))

    def is_normalized(self, tol: float = 1e-12) -> bool:
        return abs(self.norm - 1.0) <= tol

    def normalize(self, tolerances: Tolerances = DEFAULT_TOLERANCES) -> tuple[float, "DirichletForm"]:
        """
        Returns (|E|, E/|E|). The largest coordinate absorbs the rounding so
        the result sums to one; zero coefficients stay exactly zero.

        Raises:
            ZeroFormError: If |E| <= zero_tol.
        """
        total = self.norm
        if total <= tolerances.zero_tol:
            raise ZeroFormError(f"Cannot normalize a form with |E| = {total:.3e}.")
        coeffs = self.coeffs / total
        top = int(np.argmax(coeffs))
        coeffs[top] = 0.0
        coeffs[top] = 1.0 - coeffs.sum()
        return total, DirichletForm(self.n_boundary, coeffs)

    def positive_pairs(self, tolerances: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
        """Mask of coefficients above zero_tol (relative to |E| when |E| > 0)."""
        scale = self.norm if self.norm > 0 else 1.0
        return self.coeffs > tolerances.zero_tol * scale

    def positivity_graph_components(self, tolerances: Tolerances = DEFAULT_TOLERANCES) -> list[tuple[int, ...]]:
        """
        Connected components of the graph whose edges are the pairs with a
        positive coefficient, as sorted 0-based vertex tuples ordered by
        their smallest vertex.
        """
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n_boundary))
        for d in np.flatnonzero(self.positive_pairs(tolerances)):
            graph.add_edge(*self.pair_index.pair(d))
        return sorted((tuple(sorted(c)) for c in nx.connected_components(graph)), key=lambda c: c[0])

    def is_irreducible(self, tolerances: Tolerances = DEFAULT_TOLERANCES) -> bool:
        """Membership in D~: E(u) = 0 only for constant u."""
        return len(self.positivity_graph_components(tolerances)) == 1

    def kernel_basis(self, tolerances: Tolerances = DEFAULT_TOLERANCES) -> "FormKernel":
        return FormKernel.from_components(self.n_boundary, self.positivity_graph_components(tolerances))

    def to_dict(self) -> dict:
        return {"n_boundary": self.n_boundary, "coeffs": [float(c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, raw) -> "DirichletForm":
        if not isinstance(raw, dict) or "n_boundary" not in raw or "coeffs" not in raw:
            raise FormError("A form file needs 'n_boundary' and 'coeffs'.")
        return cls.from_coeffs(int(raw["n_boundary"]), [float(c) for c in raw["coeffs"]])


@dataclass(frozen=True, eq=False)
class FormKernel:
    """
    The kernel E^{-1}(0) of a form: the span of the indicator vectors of its
    positivity-graph components. Column a of `basis` is the normalized
    indicator of components[a].
    """
    n_boundary: int
    components: tuple[tuple[int, ...], ...]
    basis: np.ndarray

    @classmethod
    def from_components(cls, n_boundary: int, components) -> "FormKernel":
        components = tuple(tuple(c) for c in components)
        basis = np.zeros((n_boundary, len(components)))
        for a, component in enumerate(components):
            basis[list(component), a] = 1.0 / math.sqrt(len(component))
        basis.setflags(write=False)
        return cls(n_boundary, components, basis)

    @property
    def dimension(self) -> int:
        return len(self.components)

    @property
    def is_trivial(self) -> bool:
        """Only the constants."""
        return self.dimension == 1

    def component_of(self) -> list[int]:
        """Component number of every vertex."""
        owner = [0] * self.n_boundary
        for a, component in enumerate(self.components):
            for j in component:
                owner[j] = a
        return owner

    def coordinates(self, u) -> np.ndarray:
        return self.basis.T @ np.asarray(u, dtype=float)

    def lift(self, y) -> np.ndarray:
        return self.basis @ np.asarray(y, dtype=float)

    def contains(self, u, tol: float = 1e-10) -> bool:
        u = np.asarray(u, dtype=float)
        residual = u - self.lift(self.coordinates(u))
        return float(np.abs(residual).max(initial=0.0)) <= tol * max(1.0, float(np.abs(u).max(initial=0.0)))


def coefficients_from_form(q: Callable[[np.ndarray], float], n_boundary: int) -> DirichletForm:
    """
    Recovers the coefficients of a quadratic form on R^N by polarization:
    E_{j1,j2} = (q(chi_j1 - chi_j2) - q(chi_j1 + chi_j2)) / 4.

    Nonnegativity is not enforced; callers decide what negative output means.
    """
    index = PairIndex(n_boundary)
    coeffs = np.empty(len(index))
    for d, (j1, j2) in enumerate(index):
        minus = np.zeros(n_boundary)
        minus[j1], minus[j2] = 1.0, -1.0
        plus = np.abs(minus)
        coeffs[d] = 0.25 * (q(minus) - q(plus))
    return DirichletForm(n_boundary, coeffs)


def comparability(e1: DirichletForm, e2: DirichletForm, tolerances: Tolerances = DEFAULT_TOLERANCES) -> tuple[float, float]:
    """
    Best constants c, c' with c E1 <= E2 <= c' E1.

    Raises:
        NotIrreducibleError: If either form is reducible.
    """
    if e1.n_boundary != e2.n_boundary:
        raise FormDimensionError("Forms live on different vertex sets.")
    for name, form in (("E1", e1), ("E2", e2)):
        if not form.is_irreducible(tolerances):
            raise NotIrreducibleError(f"{name} is not irreducible.")
    bounds = rayleigh_bounds(e2.laplacian(), e1.laplacian(), tolerances=tolerances)
    return bounds.min_ratio, bounds.max_ratio


def form_to_json(form: DirichletForm) -> str:
    return json.dumps(form.to_dict()) + "\n"


def load_form(path: str) -> DirichletForm:
    """Reads a form file {"n_boundary": N, "coeffs": [...]}."""
    with open(path, "r", encoding="utf-8") as f:
        try:
            raw = json.load(f)
        except json.JSONDecodeError as e:
            raise FormError(f"'{path}' is not valid JSON: {e}")
    return DirichletForm.from_dict(raw)


def dump_form(form: DirichletForm, path: str):
    with open(path, "w", encoding="utf-8") as f:
        f.write(form_to_json(form))
