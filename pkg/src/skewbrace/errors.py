"""Exception hierarchy.

Every error that carries a counterexample exposes it as ``witness`` so callers
(and the CLI) can print it without parsing the message.
"""


class SkewBraceError(Exception):
    """Base class for all errors raised by this package."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class TooLarge(SkewBraceError, ValueError):
    pass


class GroupInvalid(SkewBraceError, ValueError):
    pass


class NotAssociative(GroupInvalid):
    pass


class NoIdentity(GroupInvalid):
    pass


class NoInverse(GroupInvalid):
    pass


class NotASubgroup(SkewBraceError, ValueError):
    pass


class NotNormal(SkewBraceError, ValueError):
    pass


class MismatchedIdentity(SkewBraceError, ValueError):
    pass


class AxiomFails(SkewBraceError, ValueError):
    pass


class NotAnIdeal(SkewBraceError, ValueError):
    pass


class ArityMismatch(SkewBraceError, ValueError):
    pass


class PreconditionViolated(SkewBraceError, ValueError):
    pass


class NotBilinear(SkewBraceError, ValueError):
    pass


class KNotAbelian(SkewBraceError, ValueError):
    pass


class TrivialCenter(SkewBraceError, ValueError):
    pass


class CocycleIdentityFails(SkewBraceError, ValueError):
    pass


class CompatibilityFails(SkewBraceError, ValueError):
    pass


class ParseError(SkewBraceError, ValueError):
    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.line = line
        self.field = field


class ValidationError(SkewBraceError, ValueError):
    pass


class InternalInconsistency(SkewBraceError, AssertionError):
    """A proven identity failed on concrete data. This always means a bug."""
