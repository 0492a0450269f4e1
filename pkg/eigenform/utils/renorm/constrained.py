import math
from dataclasses import dataclass

import networkx as nx
import numpy as np

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..forms import FormKernel, QuadraticFormMatrix
from ..triples import FractalTriple
from .elimination import schur_complement
from .exceptions import KernelMismatchError


@dataclass(frozen=True, eq=False)
class ConstrainedForm:
    """
    u -> inf { S_{1,r}(E)(v) : v = u on V(0), v o psi_i in kernel for all i }
    for u in the kernel.

    `coordinates` is the form in kernel coordinates y (u = kernel.basis @ y);
    `lifted` is the same form as an N x N matrix, exact for u in the kernel.
    `feasible` spans the kernel coordinates for which the constraints can be
    met; the value is +inf in every other direction.
    """
    kernel: FormKernel
    coordinates: np.ndarray
    lifted: QuadraticFormMatrix
    feasible: np.ndarray
    classes: tuple[tuple[int, ...], ...]

    @property
    def infeasible_directions(self) -> int:
        return self.kernel.dimension - self.feasible.shape[1]

    def feasible_subspace(self) -> np.ndarray:
        """Basis (N x f) of the feasible part of the kernel."""
        return self.kernel.basis @ self.feasible

    def is_feasible(self, u, tol: float = 1e-10) -> bool:
        y = self.kernel.coordinates(u)
        residual = y - self.feasible @ (self.feasible.T @ y)
        return float(np.abs(residual).max(initial=0.0)) <= tol * max(1.0, float(np.abs(y).max(initial=0.0)))

    def value(self, u) -> float:
        """Constrained energy of a kernel vector; +inf where infeasible."""
        if not self.is_feasible(u):
            return math.inf
        return self.lifted(u)


def _merge_classes(triple: FractalTriple, kernel: FormKernel) -> list[tuple[int, ...]]:
    """
    Vertices of V(1) forced equal by "v o psi_i is constant on every kernel
    component": the equality constraints' null space is spanned by the
    indicators of these classes. Boundary classes come first.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(triple.n_total))
    for row in triple.cell_maps:
        for component in kernel.components:
            images = [row[h] for h in component]
            graph.add_edges_from(zip(images, images[1:]))
    classes = [tuple(sorted(c)) for c in nx.connected_components(graph)]
    n = triple.n_boundary
    return sorted(classes, key=lambda c: (c[0] >= n, c[0]))


def constrained_trace(s1: QuadraticFormMatrix, triple: FractalTriple, kernel: FormKernel,
                      tolerances: Tolerances = DEFAULT_TOLERANCES) -> ConstrainedForm:
    """
    Minimizes the level-1 form s1 over extensions that are constant on each
    kernel component inside every cell.

    The constraints are equalities between vertices, so the admissible v are
    v = P z with P the class indicator matrix. The reduced form P^T s1 P is
    eliminated onto the boundary classes; a kernel direction is feasible
    when every boundary class receives a single value from u.

    Raises:
        KernelMismatchError: If the kernel is not a kernel on V(0) of the triple.
    """
    n = triple.n_boundary
    if kernel.n_boundary != n or kernel.basis.shape[0] != n:
        raise KernelMismatchError(f"Kernel lives on {kernel.n_boundary} vertices, the triple has N = {n}.")
    if s1.vertex_count != triple.n_total:
        raise KernelMismatchError(f"Level-1 form has {s1.vertex_count} vertices, expected {triple.n_total}.")

    classes = _merge_classes(triple, kernel)
    n_boundary_classes = sum(1 for c in classes if c[0] < n)

    indicator = np.zeros((triple.n_total, len(classes)))
    for a, members in enumerate(classes):
        indicator[list(members), a] = 1.0
    reduced = schur_complement(indicator.T @ s1.matrix @ indicator, n_boundary_classes, tolerances)

    owner = kernel.component_of()
    m = kernel.dimension

    # R: component values -> boundary class values; components sharing a
    # boundary class must agree for the direction to be feasible.
    spread = np.zeros((n_boundary_classes, m))
    links = nx.Graph()
    links.add_nodes_from(range(m))
    for b, members in enumerate(classes[:n_boundary_classes]):
        owners = [owner[j] for j in members if j < n]
        spread[b, owners[0]] = 1.0
        links.add_edges_from(zip(owners, owners[1:]))

    scale = np.array([1.0 / math.sqrt(len(component)) for component in kernel.components])
    coordinates = (scale[:, None] * spread.T) @ reduced @ (spread * scale[None, :])
    coordinates = 0.5 * (coordinates + coordinates.T)

    groups = sorted((sorted(g) for g in nx.connected_components(links)), key=lambda g: g[0])
    feasible = np.zeros((m, len(groups)))
    for g, members in enumerate(groups):
        column = np.zeros(m)
        column[members] = 1.0 / scale[members]
        feasible[:, g] = column / np.linalg.norm(column)

    lifted = kernel.basis @ coordinates @ kernel.basis.T
    return ConstrainedForm(
        kernel=kernel,
        coordinates=coordinates,
        lifted=QuadraticFormMatrix(0.5 * (lifted + lifted.T)),
        feasible=feasible,
        classes=tuple(classes),
    )
