"""Exception hierarchy shared by all modules."""


class BruhatError(Exception):
    """Base class for every error raised by this package."""


class PermutationError(BruhatError, ValueError):
    """A word is not a permutation of 1..n, or an index is out of range."""


class Non132AvoidingError(BruhatError, ValueError):
    def __init__(self, pi):
        self.pi = pi
        super().__init__(f"{pi} contains the pattern 132")


class NotBelowPiError(BruhatError, ValueError):
    """sigma is not below pi in right weak order."""

    def __init__(self, sigma, pi):
        self.sigma = sigma
        self.pi = pi
        super().__init__(f"{sigma} is not in the weak interval [e, {pi}]")


class IntervalTooLargeError(BruhatError):
    def __init__(self, pi, bound):
        self.pi = pi
        self.bound = bound
        super().__init__(f"interval below {pi} exceeds {bound} elements")


class NotACoverError(BruhatError, ValueError):
    """A transposition does not give a strong-order cover."""


class DimensionMismatchError(BruhatError, ValueError):
    pass


class RankSizeMismatchError(BruhatError):
    """Mirrored rank levels of an interval differ in size."""


class TooLargeForBruteForceError(BruhatError):
    pass


class InvariantViolation(BruhatError, AssertionError):
    """A proven identity failed to hold; always an implementation bug."""


class InexactDivisionError(InvariantViolation):
    pass


class PaddingViolationError(InvariantViolation):
    pass
