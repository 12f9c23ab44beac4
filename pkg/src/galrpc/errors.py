"""Exception hierarchy shared by every layer of the package."""


class GalrpcError(Exception):
    """Base class for all errors raised by galrpc."""


class ParameterError(GalrpcError, ValueError):
    """Invalid or mismatched parameters (field, group, dimensions)."""


class StructureError(GalrpcError, ValueError):
    """A group table violates the group axioms."""


class OrderingError(StructureError):
    """The first listed group element is not the identity."""


class NoSolution(GalrpcError, ArithmeticError):
    """A linear system is inconsistent."""


class SingularMatrix(GalrpcError, ArithmeticError):
    pass


class NotInvertible(GalrpcError, ArithmeticError):
    """A group-algebra element has no inverse."""


class SamplingError(GalrpcError, RuntimeError):
    """Rejection sampling did not succeed within its retry budget."""


class DecodeFailure(GalrpcError):
    """Rank support recovery could not produce a verified support."""


class DecapFailure(DecodeFailure):
    pass


class FormatError(GalrpcError, ValueError):
    """Malformed serialized data. Subclasses identify the failing check."""

    code = "format"


class BadMagic(FormatError):
    code = "magic"


class BadVersion(FormatError):
    code = "version"


class BadKind(FormatError):
    code = "kind"


class BadLength(FormatError):
    code = "length"


class BadField(FormatError):
    code = "field"


class BadGroup(FormatError):
    code = "group"


class BadParams(FormatError):
    code = "params"


class BadCoefficient(FormatError):
    code = "coefficient"
