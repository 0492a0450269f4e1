from dataclasses import dataclass

import numpy as np

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..forms import DirichletForm, FormDimensionError, FormKernel, NotIrreducibleError, rayleigh_bounds
from .exceptions import KernelMismatchError, TrivialKernelError


@dataclass(frozen=True)
class EtaResult:
    """Extremal values of E / E_ref over non-constant kernel functions."""
    eta: float
    eta_min: float
    maximizer: np.ndarray

    def to_dict(self) -> dict:
        return {"eta": self.eta, "eta_min": self.eta_min, "maximizer": [float(x) for x in self.maximizer]}


def eta(form: DirichletForm, reference: DirichletForm, kernel: FormKernel,
        tolerances: Tolerances = DEFAULT_TOLERANCES) -> EtaResult:
    """
    eta_E: the largest ratio E(u) / E_ref(u) over non-constant u in the
    kernel. The maximizer satisfies E(u) = eta * E_ref(u).

    Raises:
        TrivialKernelError: If the kernel holds only constants.
        NotIrreducibleError: If the reference form is reducible.
    """
    if form.n_boundary != reference.n_boundary:
        raise FormDimensionError("E and E_ref live on different vertex sets.")
    if kernel.n_boundary != form.n_boundary:
        raise KernelMismatchError(f"Kernel lives on {kernel.n_boundary} vertices, E on {form.n_boundary}.")
    if kernel.dimension < 2:
        raise TrivialKernelError("The kernel has no non-constant direction.")
    if not reference.is_irreducible(tolerances):
        raise NotIrreducibleError("The reference form must be irreducible.")

    bounds = rayleigh_bounds(form.laplacian(), reference.laplacian(), kernel.basis, tolerances)
    return EtaResult(eta=bounds.max_ratio, eta_min=bounds.min_ratio, maximizer=bounds.maximizer)
