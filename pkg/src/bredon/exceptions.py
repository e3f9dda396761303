"""Error types raised by the package.

Every exception carries a stable ``code`` string so that callers (and the
command-line frontend) can dispatch on the failure kind without parsing
messages.
"""

from __future__ import annotations


class BredonError(Exception):
    """Base class for all package errors."""

    code = "ERROR"


class ConstraintViolation(BredonError):
    """A structural bound on a normal form was violated (e.g. p < q)."""

    code = "CONSTRAINT_VIOLATION"


class NegativeMultiplicity(BredonError):
    """A summand multiplicity was zero or negative."""

    code = "NEGATIVE_MULTIPLICITY"


class InvalidShift(BredonError):
    """A suspension shift (p, q) failed p >= q >= 0."""

    code = "INVALID_SHIFT"


class NegativeExponent(BredonError):
    """A polynomial substitution produced a negative exponent."""

    code = "NEGATIVE_EXPONENT"


class TorsionUnknown(BredonError):
    """Torsion-freeness was required but not asserted by the caller."""

    code = "TORSION_UNKNOWN"


class InternalInconsistency(BredonError):
    """Two computation paths that must agree did not; indicates a bug."""

    code = "INTERNAL_INCONSISTENCY"


class InfeasibleBounds(BredonError):
    """Constraint data lies outside the feasible degree window."""

    code = "INFEASIBLE_BOUNDS"


class UnknownName(BredonError):
    """Catalog lookup with a name that is not registered."""

    code = "UNKNOWN_NAME"


class ParameterRange(BredonError):
    """Catalog parameters outside their documented range."""

    code = "PARAMETER_RANGE"


class ParseError(BredonError):
    """Input text is not valid JSON; carries line/column when known."""

    code = "PARSE_ERROR"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


class SchemaError(BredonError):
    """Parsed JSON does not match the expected schema; names the field."""

    code = "SCHEMA_ERROR"

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
