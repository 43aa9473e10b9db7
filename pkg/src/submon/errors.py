"""Exception hierarchy shared by every module."""


class SubmonError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SubmonError, ValueError):
    pass


class LetterOutOfRange(SubmonError, ValueError):
    pass


class RankMismatch(SubmonError, ValueError):
    pass


class IdentityGenerator(SubmonError, ValueError):
    pass


class ResourceLimit(SubmonError):
    """A computation would exceed its configured budget."""

    def __init__(self, message, *, budget=None, argument=None):
        super().__init__(message)
        self.budget = budget
        self.argument = argument


class NotInMonoid(SubmonError, ValueError):
    pass


class InfinitePreimage(SubmonError):
    pass


class NotGraded(SubmonError):
    def __init__(self, message, *, witness=None):
        super().__init__(message)
        self.witness = witness


class InfiniteLanguage(SubmonError):
    pass


class EmptyLanguage(SubmonError):
    pass


class NotTrim(SubmonError, ValueError):
    pass
