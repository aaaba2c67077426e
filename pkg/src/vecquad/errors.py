"""Exception hierarchy shared by all modules."""


class VecquadError(Exception):
    """Base class for every error raised by this package."""


class ParseError(VecquadError, ValueError):
    """A functional or algebra spec string could not be parsed."""


class DomainError(VecquadError, ValueError):
    """Input outside the domain of an operation (non-finite values, 0/0)."""


class DegenerateFunctionalError(VecquadError, ArithmeticError):
    """The functional vanished on a nonzero product."""


class ConditionNotMet(VecquadError, ValueError):
    """A closed-form representation was requested outside its regime."""


class UnsupportedRegime(VecquadError, ValueError):
    """The requested search is outside the supported coefficient regime."""
