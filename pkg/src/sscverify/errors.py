"""Exception types raised by the package."""


class SscError(Exception):
    """Base class for all package errors."""


class IndexOutOfRange(SscError, IndexError):
    pass


class DuplicateEntry(SscError, ValueError):
    def __init__(self, i, j):
        super().__init__(f"duplicate entry at ({i}, {j})")
        self.i = i
        self.j = j


class PatternFormatError(SscError, ValueError):
    """Malformed or inconsistent Matrix Market input."""


class ExhaustionBoundExceeded(SscError, ValueError):
    pass


class BudgetExceeded(SscError):
    def __init__(self, searched_r, needed, budget):
        super().__init__(
            f"candidate budget {budget} exceeded: {needed} candidates needed "
            f"after searching up to r={searched_r}"
        )
        self.searched_r = searched_r
        self.needed = needed
        self.budget = budget


class NoSolutionWithin(SscError):
    def __init__(self, max_r, candidates_tested=0):
        super().__init__(f"no SSC input matrix with at most {max_r} columns")
        self.max_r = max_r
        self.candidates_tested = candidates_tested


class GenerationFailed(SscError):
    def __init__(self, attempts, require):
        super().__init__(f"no pattern satisfying {require!r} after {attempts} attempts")
        self.attempts = attempts
        self.require = require
