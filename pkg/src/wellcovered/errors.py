"""Exception types shared by all modules.

Every error raised on a documented contract violation has a distinct class
so callers (and the CLI) can surface it by name.
"""


class WellcoveredError(Exception):
    """Base class for all package errors."""


# --- graph construction -----------------------------------------------------

class EndpointOutOfRange(WellcoveredError):
    pass


class SelfLoop(WellcoveredError):
    pass


class DuplicateEdge(WellcoveredError):
    pass


class MissingParameter(WellcoveredError):
    pass


class InvalidParameter(WellcoveredError):
    pass


class EmptyFactor(WellcoveredError):
    pass


class VertexOutOfRange(WellcoveredError):
    pass


class NotIndependent(WellcoveredError):
    pass


# --- independence machinery -------------------------------------------------

class NotWellCovered(WellcoveredError):
    pass


class EnumerationTooLarge(WellcoveredError):
    """Full maximal-set enumeration refused above the order guardrail.

    Pass allow_large=True to override when the blowup is intentional.
    """


# --- certificates -----------------------------------------------------------

class PreconditionViolated(WellcoveredError):
    """A witness builder hypothesis failed; `reason` names which one."""

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        msg = reason if not detail else f"{reason}: {detail}"
        super().__init__(msg)


class ProofInvariantBroken(WellcoveredError):
    """An internal step of a witness construction did not come out as
    guaranteed; signals a hypothesis violation upstream."""


class SpecViolation(WellcoveredError):
    """A clique-family description breaks one of its side conditions."""

    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        msg = condition if not detail else f"{condition}: {detail}"
        super().__init__(msg)


class DegreeTooLarge(WellcoveredError):
    pass


# --- graph I/O and enumeration ----------------------------------------------

class BadHeader(WellcoveredError):
    pass


class TruncatedPayload(WellcoveredError):
    pass


class TrailingGarbage(WellcoveredError):
    pass


class NonCanonicalPadding(WellcoveredError):
    pass


class OrderTooLarge(WellcoveredError):
    pass


class MalformedLine(WellcoveredError):
    pass


class OrderTooLargeForGenerator(WellcoveredError):
    pass


# --- harness ------------------------------------------------------------------

class UnknownStatement(WellcoveredError):
    pass


class BoundsTooLarge(WellcoveredError):
    pass
