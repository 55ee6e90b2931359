"""Exception hierarchy shared by all regulous modules."""


class RegulousError(Exception):
    """Base class of every error raised by the toolkit."""


class ParseError(RegulousError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(ParseError):
    def __init__(self, name: str, position: int):
        super().__init__(f"unknown variable '{name}'", position)
        self.name = name


class BudgetError(RegulousError):
    """A configured size limit (exponent, coefficient bits) was exceeded."""


class ExponentOverflowError(BudgetError):
    def __init__(self, exponent: int, cap: int, position: int | None = None):
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"exponent {exponent} exceeds cap {cap}{where}")
        self.exponent = exponent
        self.position = position


class AmbientMismatchError(RegulousError):
    """Operands live in different polynomial rings."""


class ArityError(RegulousError):
    """A point or image list has the wrong number of coordinates."""


class ZeroDenominatorError(RegulousError, ZeroDivisionError):
    """Zero denominator or division by the zero function."""


class PoleError(RegulousError):
    """Evaluation at a pole, or an arc lying entirely inside the pole locus."""


class DegenerateInputError(RegulousError):
    """Input outside an operation's domain (zero polynomial, constants in the eliminated variable...)."""


class DimensionError(RegulousError):
    """The operation needs a specific number of variables (usually the plane, n = 2)."""


class NotRegulousError(RegulousError):
    """Operation requires a certified regulous input but the decision was negative or Unknown."""


class UnresolvedTreeError(RegulousError):
    """Fiber analysis requested on a resolution tree whose status is not `resolved`."""


class IncidenceError(RegulousError):
    """Missing or inconsistent arc-symmetric incidence data."""


class MalformedTreeError(RegulousError):
    """Certification tree with an unknown node, wrong arity or an undefined composition."""


class CertificateFormatError(RegulousError):
    """Certificate file with a missing field or an unknown kind."""


class SchemaError(RegulousError):
    """JSON report that does not match the documented schema of its command."""


class UsageError(RegulousError):
    """Invalid command line."""
