"""Exception hierarchy shared by every module of the package."""


class PimError(Exception):
    """Base class for domain errors."""


class EquationSyntaxError(PimError, ValueError):
    pass


class TrivialEquation(PimError, ValueError):
    """Both sides of an equation coincide once quasi-reduced."""


class DegenerateInput(PimError, ValueError):
    """A degenerate (monogenic) equation was passed where a classified one is required."""


class NotFinite(PimError):
    pass


class Unsupported(PimError):
    pass


class BoundTooSmall(PimError, ValueError):
    pass


class CapExceeded(PimError):
    pass


class UnknownCase(PimError, KeyError):
    pass


class InvalidTopology(PimError, ValueError):
    pass
