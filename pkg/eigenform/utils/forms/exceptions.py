class FormError(Exception):
    """Base exception for Dirichlet form errors."""
    pass


class FormDimensionError(FormError):
    """Vector or matrix sizes do not match the form."""
    pass


class ZeroFormError(FormError):
    """The form has (numerically) zero total mass |E|."""
    pass


class NotIrreducibleError(FormError):
    """An irreducible form was required but the positivity graph is disconnected."""
    pass


class DenominatorDegenerateError(FormError):
    """The denominator of a Rayleigh quotient is singular on the requested subspace."""
    pass
