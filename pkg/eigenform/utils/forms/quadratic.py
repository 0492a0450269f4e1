from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh, eigvalsh, orth

from ..config import DEFAULT_TOLERANCES, Tolerances
from .exceptions import FormDimensionError, FormError, DenominatorDegenerateError


@dataclass(frozen=True, eq=False)
class QuadraticFormMatrix:
    """
    Dense symmetric matrix Q with u -> u^T Q u the energy of u.

    Forms built here are PSD with zero row sums (constants carry no
    energy); `validate` checks those invariants to tolerance.
    """
    matrix: np.ndarray

    def __post_init__(self):
        q = np.array(self.matrix, dtype=float)
        if q.ndim != 2 or q.shape[0] != q.shape[1]:
            raise FormDimensionError(f"A quadratic form needs a square matrix, got shape {q.shape}.")
        q.setflags(write=False)
        object.__setattr__(self, "matrix", q)

    @property
    def vertex_count(self) -> int:
        return self.matrix.shape[0]

    def __call__(self, u) -> float:
        u = np.asarray(u, dtype=float)
        if u.shape != (self.vertex_count,):
            raise FormDimensionError(f"Expected a vector of length {self.vertex_count}, got shape {u.shape}.")
        return float(u @ self.matrix @ u)

    def scaled(self, factor: float) -> "QuadraticFormMatrix":
        return QuadraticFormMatrix(factor * self.matrix)

    def violations(self, tolerances: Tolerances = DEFAULT_TOLERANCES) -> list[str]:
        """Lists the invariants (symmetry, PSD, zero row sums) that fail."""
        q = self.matrix
        scale = max(np.abs(q).max(initial=0.0), 1.0)
        problems = []
        if np.abs(q - q.T).max(initial=0.0) > tolerances.sym_tol * scale:
            problems.append("not symmetric")
        if np.abs(q.sum(axis=1)).max(initial=0.0) > tolerances.sym_tol * scale:
            problems.append("nonzero row sums")
        if q.size and eigvalsh(0.5 * (q + q.T))[0] < -tolerances.psd_tol * np.linalg.norm(q, 2):
            problems.append("not positive semidefinite")
        return problems

    def validate(self, tolerances: Tolerances = DEFAULT_TOLERANCES) -> "QuadraticFormMatrix":
        problems = self.violations(tolerances)
        if problems:
            raise FormError("Invalid quadratic form: " + ", ".join(problems) + ".")
        return self


@dataclass(frozen=True)
class RayleighBounds:
    """Extremal ratios of a pencil and vectors attaining them."""
    min_ratio: float
    max_ratio: float
    minimizer: np.ndarray
    maximizer: np.ndarray

    def __iter__(self):
        yield self.min_ratio
        yield self.max_ratio


def _matrix(q) -> np.ndarray:
    return q.matrix if isinstance(q, QuadraticFormMatrix) else np.asarray(q, dtype=float)


def nonconstant_basis(n: int, subspace=None) -> np.ndarray:
    """Orthonormal basis of subspace ∩ constants⊥ (the full space if None)."""
    basis = np.eye(n) if subspace is None else np.asarray(subspace, dtype=float).reshape(n, -1)
    if basis.shape[1] == 0:
        return np.zeros((n, 0))
    centered = basis - basis.mean(axis=0, keepdims=True)
    if not np.any(centered):
        return np.zeros((n, 0))
    return orth(centered)


def rayleigh_bounds(q_num, q_den, subspace=None, tolerances: Tolerances = DEFAULT_TOLERANCES) -> RayleighBounds:
    """
    Smallest and largest value of q_num(u) / q_den(u) over non-constant
    u in the span of `subspace`.

    The pencil is restricted to an orthonormal basis B of
    subspace ∩ constants⊥ and solved densely with scipy.linalg.eigh.

    Raises:
        DenominatorDegenerateError: If there is no non-constant direction or
            B^T q_den B is singular beyond def_tol.
    """
    num, den = _matrix(q_num), _matrix(q_den)
    n = den.shape[0]
    if num.shape != (n, n):
        raise FormDimensionError(f"Pencil matrices differ in shape: {num.shape} vs {den.shape}.")

    basis = nonconstant_basis(n, subspace)
    if basis.shape[1] == 0:
        raise DenominatorDegenerateError("The subspace contains no non-constant direction.")

    a = basis.T @ num @ basis
    b = basis.T @ den @ basis
    a = 0.5 * (a + a.T)
    b = 0.5 * (b + b.T)

    den_eigs = eigvalsh(b)
    if den_eigs[-1] <= 0 or den_eigs[0] <= tolerances.def_tol * den_eigs[-1]:
        raise DenominatorDegenerateError(
            f"Denominator is singular on the subspace (eigenvalues {den_eigs[0]:.3e} .. {den_eigs[-1]:.3e})."
        )

    ratios, vectors = eigh(a, b)
    return RayleighBounds(
        min_ratio=float(ratios[0]),
        max_ratio=float(ratios[-1]),
        minimizer=basis @ vectors[:, 0],
        maximizer=basis @ vectors[:, -1],
    )
