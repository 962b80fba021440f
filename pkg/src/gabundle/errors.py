"""Exception hierarchy.

Everything raised deliberately by the library derives from ``GaBundleError``.
``PreconditionError`` marks a violated input contract (the CLI maps it to
exit code 3); ``InputError`` marks malformed or oversized input (exit 2).
"""


class GaBundleError(Exception):
    pass


class InputError(GaBundleError, ValueError):
    pass


class SchemaError(InputError):
    """JSON document does not match the expected schema."""


class ExpansionTooLarge(InputError):
    """A pullback would exceed the configured ``max_degree`` guard."""


class PreconditionError(GaBundleError, ValueError):
    pass


class InvalidBundleSpec(PreconditionError):
    pass


class RelatorLeadingTermAmbiguous(PreconditionError):
    pass


class DegreeMismatch(PreconditionError):
    pass


class SingularMatrix(PreconditionError):
    pass


class TrivialBundle(PreconditionError):
    pass


class ZeroCocycle(PreconditionError):
    pass


class BadLambda(PreconditionError):
    pass


class SectionIdentityMismatch(GaBundleError, ArithmeticError):
    """The split-based value s(lambda) disagrees with the closed formula r(lambda)."""
