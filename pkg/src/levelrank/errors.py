"""Exception taxonomy shared across the package.

Every domain error carries a short machine-readable ``code`` so the CLI and
service can map failures to stable error strings and exit codes.
"""


class LevelRankError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "error"


class InvalidRepresentationError(LevelRankError):
    """A Young diagram is not a valid representation label in the given theory."""

    code = "invalid-representation"


class InconsistentFusionTripleError(LevelRankError):
    """Box counts of a fusion triple are inconsistent with the rank parameter."""

    code = "inconsistent-fusion-triple"


class ShapeViolationError(LevelRankError):
    """A tableau operation would produce rows that are not non-increasing."""

    code = "shape-violation"


class UnsupportedTheoryError(LevelRankError):
    """The requested construction only exists for a restricted (N, K) family."""

    code = "unsupported-theory"


class NonIntegrableColorError(LevelRankError):
    """A color is not an integrable representation at the given level."""

    code = "non-integrable-color"


class UnknownLinkError(LevelRankError):
    """The named link topology is not one of the built-in diagrams."""

    code = "unknown-link"


class OversizeDiagramError(LevelRankError):
    """A planar diagram exceeds the state-sum feasibility bound."""

    code = "oversize-diagram"


class NumericalFailureError(LevelRankError):
    """An internal numerical consistency check failed beyond tolerance."""

    code = "numerical-failure"
