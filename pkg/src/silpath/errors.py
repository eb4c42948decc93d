"""Exception hierarchy for silpath."""


class SilpathError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedType(SilpathError):
    pass


class DimensionMismatch(SilpathError):
    pass


class NotARoot(SilpathError):
    pass


class NotARealRoot(SilpathError):
    pass


class NotAPetersonRep(SilpathError):
    pass


class NotMinimalRep(SilpathError):
    pass


class JMismatch(SilpathError):
    pass


class DataError(SilpathError):
    """An internal consistency check on root data failed."""


class OutOfDomain(SilpathError):
    pass


class InvalidPath(SilpathError):
    pass


class BadCuts(InvalidPath):
    pass


class NotDecreasing(InvalidPath):
    pass


class BadMultiple(SilpathError):
    pass


class NotCanonicalForm(SilpathError):
    pass


class BudgetExceeded(SilpathError):
    """Search gave up; this is not a claim that the target does not exist."""


class ParseError(SilpathError):
    pass
