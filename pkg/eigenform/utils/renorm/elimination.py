import numpy as np
from scipy.linalg import pinvh

from ..config import DEFAULT_TOLERANCES, Tolerances


def schur_complement(matrix: np.ndarray, keep: int, tolerances: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """
    A - B C^+ B^T for the split of `matrix` into its first `keep` rows and
    columns (A) and the rest (C). Eigenvalues of C below
    rank_tol * max|eig(C)| are treated as zero; for PSD input the range of
    B^T lies in that of C, so the infimum over the eliminated block is
    attained.
    """
    if matrix.shape[0] == keep:
        return np.array(matrix, dtype=float)
    a = matrix[:keep, :keep]
    b = matrix[:keep, keep:]
    c = matrix[keep:, keep:]
    rtol = tolerances.rank_tol or max(c.shape) * np.finfo(float).eps
    reduced = a - b @ pinvh(c, rtol=rtol) @ b.T
    return 0.5 * (reduced + reduced.T)
