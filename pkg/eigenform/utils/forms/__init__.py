# eigenform/utils/forms/__init__.py
from .exceptions import (
    FormError, FormDimensionError, ZeroFormError, NotIrreducibleError, DenominatorDegenerateError,
)
from .quadratic import QuadraticFormMatrix, RayleighBounds, rayleigh_bounds, nonconstant_basis
from .dirichlet import (
    DirichletForm, FormKernel, coefficients_from_form, comparability, load_form, dump_form, form_to_json,
)

__all__ = [
    "FormError", "FormDimensionError", "ZeroFormError", "NotIrreducibleError", "DenominatorDegenerateError",
    "QuadraticFormMatrix", "RayleighBounds", "rayleigh_bounds", "nonconstant_basis",
    "DirichletForm", "FormKernel", "coefficients_from_form", "comparability", "load_form", "dump_form", "form_to_json",
]
