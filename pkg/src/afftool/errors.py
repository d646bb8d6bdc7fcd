"""Exception taxonomy shared across the toolkit.

The CLI maps these onto its exit-code contract: schema violations exit 2,
precondition failures exit 3, evaluation failures exit 4.
"""


class AfftoolError(Exception):
    """Base class for all toolkit errors."""


class SchemaError(AfftoolError):
    """Malformed descriptor / serialization input (CLI exit 2)."""


class PreconditionError(AfftoolError):
    """An operation was called outside its contract (CLI exit 3)."""


class EvaluationError(AfftoolError):
    """Numeric evaluation impossible, e.g. unresolved symbols (CLI exit 4)."""


class AmbiguityError(AfftoolError):
    """Exact resolution impossible at desk scale (diagnostic, CLI exit 3)."""
