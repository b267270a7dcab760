"""Exception types shared across the package."""


class ClusterCharError(Exception):
    """Base error; ``code`` is a short machine-readable tag."""

    code = "ERROR"

    def __init__(self, message="", **details):
        super().__init__(message)
        self.details = details


class NonPolynomialCount(ClusterCharError):
    code = "NON_POLYNOMIAL_COUNT"


class NotClosed(ClusterCharError):
    code = "NOT_CLOSED"


class UnsupportedCone(ClusterCharError):
    code = "UNSUPPORTED_CONE"


class HypothesisViolated(ClusterCharError):
    code = "HYPOTHESIS_VIOLATED"


class NotAFrieze(ClusterCharError):
    code = "NOT_A_FRIEZE"


class FieldMismatch(ClusterCharError):
    code = "MIXED_FIELDS"


class MalformedInput(ClusterCharError):
    code = "MALFORMED"
