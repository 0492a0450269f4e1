class TripleError(Exception):
    """Base exception for fractal triple errors."""
    pass


class TripleStructureError(TripleError):
    """The candidate table has inconsistent dimensions or malformed entries."""
    pass


class InvalidTripleError(TripleError):
    """The table is well formed but violates one of the triple conditions."""
    def __init__(self, report):
        self.report = report
        super().__init__("; ".join(str(failure) for failure in report.failures))


class UnknownTripleError(TripleError):
    """No builtin triple has the requested name."""
    pass
