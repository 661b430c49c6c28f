"""Exception hierarchy.

Every error subclasses ``ValueError`` so callers that only care about bad
input can catch that; the CLI maps ``MathDomainError`` to exit code 3.
"""


class LatnrdError(ValueError):
    pass


class DimensionError(LatnrdError):
    pass


class InvalidLatticeError(LatnrdError):
    pass


class MathDomainError(LatnrdError):
    """Input is well-formed but outside the mathematical domain of the op."""


class NotPositiveDefiniteError(MathDomainError):
    pass


class GammaDomainError(MathDomainError):
    pass


class NonPointedConeError(MathDomainError):
    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = tuple(witness)
