"""Exception hierarchy.

Every error carries the CLI exit code it maps to: 2 for bad input,
3 for a failed mathematical precondition, 4 for a solver that ran out
of iterations.
"""


class NetGamesError(Exception):
    exit_code = 2


class InputError(NetGamesError):
    exit_code = 2


class IndexOutOfRange(InputError):
    pass


class NegativeWeight(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class BudgetExceeded(InputError):
    pass


class InvalidSpec(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class LabelMismatch(InputError):
    pass


class PreconditionError(NetGamesError):
    exit_code = 3


class NotIrreducible(PreconditionError):
    pass


class NonContraction(PreconditionError):
    pass


class NoConvergence(NetGamesError):
    exit_code = 4

    def __init__(self, message, iterations=None, residual=None):
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual
