"""Exception hierarchy shared by all arcsys modules."""


class ArcsysError(ValueError):
    """Base class for every error raised by arcsys."""


class UnpairedLetter(ArcsysError):
    pass


class NonOrientable(ArcsysError):
    pass


class EulerTooLarge(ArcsysError):
    pass


class MalformedItinerary(ArcsysError):
    pass


class SurfaceMismatch(ArcsysError):
    pass


class IndistinguishableStrands(ArcsysError):
    pass


class NotStabilized(ArcsysError):
    pass


class DivisibilityError(ArcsysError):
    pass


class DegenerateSystem(ArcsysError):
    pass


class InvalidSystem(ArcsysError):
    pass


class BudgetExceeded(ArcsysError):
    pass


class TooLarge(ArcsysError):
    pass


class NotPairwiseIntersecting(ArcsysError):
    pass
