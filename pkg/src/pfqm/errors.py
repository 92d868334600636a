"""Exception hierarchy shared by all modules."""


class PFError(Exception):
    """Base class; ``exit_code`` is what the CLI returns for it."""

    exit_code = 2


class AlgebraError(PFError):
    pass


class InconsistentSystem(AlgebraError):
    """A linear system has no solution; ``row`` is the offending reduced row."""

    def __init__(self, message, row=None):
        super().__init__(message)
        self.row = row


class SingularPointError(PFError):
    pass


class NotSymmetricSquare(PFError):
    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


class InvalidModel(PFError):
    pass


class NoIndex(PFError):
    pass


class NumericCheckError(PFError):
    pass


class ParseError(PFError):
    exit_code = 1

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.position = position
