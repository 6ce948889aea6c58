"""Exception types shared across the package.

Every error that callers are expected to catch derives from
:class:`PqCurvesError`.  Budget exhaustion is deliberately separate from
domain errors so front ends can map it to a distinct exit code.
"""


class PqCurvesError(Exception):
    """Base class for all package errors."""


class NotASemigroup(PqCurvesError):
    """Closing the requested gaps breaks additive closure.

    Carries a witness ``(a, b)`` with both members but ``a + b`` missing.
    """

    def __init__(self, a, b):
        self.violating_pair = (a, b)
        super().__init__(f"{a} + {b} = {a + b} is missing, the set is not additively closed")


class InternalCheckFailed(PqCurvesError):
    """A consistency check that should always pass did not (a bug)."""


class BadExponent(PqCurvesError):
    """A curve coefficient sits at (nu, mu) with nu*p + mu*q >= p*q."""

    def __init__(self, nu, mu, bound):
        self.exponent = (nu, mu)
        super().__init__(f"coefficient at ({nu},{mu}) violates nu*p + mu*q < {bound}")


class ArityMismatch(PqCurvesError):
    """Evaluation or substitution used a variable not in the table."""


class ResourceBudgetExceeded(PqCurvesError):
    """A symbolic computation hit one of its configured caps.

    ``report`` holds which cap fired and the counters at that moment.
    """

    def __init__(self, reason, **counters):
        self.reason = reason
        self.counters = dict(counters)
        detail = ", ".join(f"{k}={v}" for k, v in sorted(counters.items()))
        super().__init__(f"budget exceeded ({reason}): {detail}")


class SolverIncomplete(PqCurvesError):
    """The singular-point solver cannot certify that it found everything."""

    def __init__(self, found, expected=None):
        self.found = found
        self.expected = expected
        msg = f"found {found} singular points"
        if expected is not None:
            msg += f", expected total length {expected}"
        super().__init__(msg + "; completeness not certified")


class NodeCountMismatch(PqCurvesError):
    """A construction promised a fixed node count and delivered another."""

    def __init__(self, got, wanted):
        self.got = got
        self.wanted = wanted
        super().__init__(f"verified {got} nodes, expected {wanted}")


class RankDeficient(PqCurvesError):
    """A matrix that must have full rank does not (or a pivot is ambiguous)."""


class NoSeparatingDirection(PqCurvesError):
    """No coefficient direction separates the nodes marked for deletion."""


class NewtonDiverged(PqCurvesError):
    """An iterative refinement failed to converge within its iteration cap."""


class DeletedNodePersists(PqCurvesError):
    """After a perturbation a node slated for deletion is still singular."""

    def __init__(self, index, point):
        self.index = index
        self.point = point
        super().__init__(f"deleted node #{index} near {point} is still a singular point")


class SemigroupMismatch(PqCurvesError):
    """A pipeline's computed semigroup differs from the prescribed target."""


class IncompatibleSemigroup(PqCurvesError):
    """The semigroup cannot arise from this (p,q) by closing gaps."""


class PreconditionFailed(PqCurvesError):
    """An operation's stated precondition does not hold for the inputs."""
