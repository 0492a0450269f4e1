class SolverError(Exception):
    """Base exception for eigenform search and checks."""
    pass


class NotDegenerateEigenformError(SolverError):
    """The form is irreducible or fails the eigenform equation."""
    pass


class NotD3Error(SolverError):
    """The degenerate form does not lie in stratum D3."""
    pass


class NotInteriorError(SolverError):
    """The reference form has a vanishing coefficient."""
    pass
