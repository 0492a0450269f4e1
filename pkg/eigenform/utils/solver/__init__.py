# eigenform/utils/solver/__init__.py
from .exceptions import SolverError, NotDegenerateEigenformError, NotD3Error, NotInteriorError
from .eigen import (
    EigenformCheck, EigenformResult, EigenformVerdict, SolveStatus, TrajectoryStep, limiting_boundary_form,
    solve_eigenform, verify_eigenform,
)
from .repulsing import KernelDominationReport, RepulsingReport, kernel_domination_check, repulsing_check
from .existence import ExistenceReport, ExistenceVerdict, existence_report

__all__ = [
    "SolverError", "NotDegenerateEigenformError", "NotD3Error", "NotInteriorError",
    "EigenformCheck", "EigenformResult", "EigenformVerdict", "SolveStatus", "TrajectoryStep",
    "limiting_boundary_form", "solve_eigenform", "verify_eigenform",
    "KernelDominationReport", "RepulsingReport", "kernel_domination_check", "repulsing_check",
    "ExistenceReport", "ExistenceVerdict", "existence_report",
]
