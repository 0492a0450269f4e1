# eigenform/utils/renorm/__init__.py
from .exceptions import (
    RenormError, WeightsError, MarkovViolationError, DegenerateImageError, KernelMismatchError, TrivialKernelError,
)
from .weights import Weights
from .boundary import BoundaryClass, Stratum
from .elimination import schur_complement
from .constrained import ConstrainedForm, constrained_trace
from .operator import (
    RenormalizationOperator, assemble_s1, classify, lambda_r, normalized_lambda, trace_to_boundary,
)
from .eta import EtaResult, eta

__all__ = [
    "RenormError", "WeightsError", "MarkovViolationError", "DegenerateImageError", "KernelMismatchError",
    "TrivialKernelError",
    "Weights", "BoundaryClass", "Stratum", "schur_complement",
    "ConstrainedForm", "constrained_trace",
    "RenormalizationOperator", "assemble_s1", "classify", "lambda_r", "normalized_lambda", "trace_to_boundary",
    "EtaResult", "eta",
]
