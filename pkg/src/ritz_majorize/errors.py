"""Exception hierarchy shared by all modules."""


class RitzMajorizeError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(RitzMajorizeError, ValueError):
    pass


class NumericalFailure(RitzMajorizeError, ArithmeticError):
    """An iterative kernel did not converge within its sweep cap."""


class RankDeficient(InvalidInput):
    pass


class NotPSD(InvalidInput):
    pass


class NotPD(InvalidInput):
    pass


class ConventionViolation(InvalidInput):
    """Zero padding was requested for a vector with negative entries."""


class IoError(RitzMajorizeError, OSError):
    pass
