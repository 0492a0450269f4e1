class RenormError(Exception):
    """Base exception for renormalization errors."""
    pass


class WeightsError(RenormError):
    """Weights are not a vector of k positive finite reals."""
    pass


class MarkovViolationError(RenormError):
    """A trace coefficient came out clearly negative (a linear-algebra failure)."""
    pass


class DegenerateImageError(RenormError):
    """|Lambda_r(E)| vanishes, so the normalized map is undefined at E."""
    pass


class KernelMismatchError(RenormError):
    """A kernel basis does not belong to the triple's boundary."""
    pass


class TrivialKernelError(RenormError):
    """The kernel holds only constants; no non-constant direction exists."""
    pass
