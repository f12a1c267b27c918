"""Exception hierarchy shared by all coercive_kit modules."""


class CoerciveKitError(Exception):
    """Base class for every error raised by coercive_kit."""


class NotPositiveDefinite(CoerciveKitError, ValueError):
    pass


class NotSemidefinite(CoerciveKitError, ValueError):
    pass


class NoConvergence(CoerciveKitError, RuntimeError):
    pass


class DimensionMismatch(CoerciveKitError, ValueError):
    pass


class RankDeficient(CoerciveKitError, ValueError):
    pass


class MetricMismatch(CoerciveKitError, ValueError):
    pass


class TrivialSubspace(CoerciveKitError, ValueError):
    pass


class IntersectingSubspaces(CoerciveKitError, ValueError):
    pass


class UnsupportedDerivative(CoerciveKitError, ValueError):
    pass


class UnsupportedForBasis(CoerciveKitError, ValueError):
    pass


class ZeroMeasureRegion(CoerciveKitError, ValueError):
    pass


class HypothesisViolated(CoerciveKitError):
    """The data do not satisfy an assumption of the coercivity result.

    This is not a numerical failure: it reports that the statement being
    checked does not apply.  ``hypothesis`` names the failing assumption.
    """

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        self.detail = detail
        msg = hypothesis if not detail else f"{hypothesis}: {detail}"
        super().__init__(msg)
