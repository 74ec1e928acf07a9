"""Exception hierarchy for near-vector space computations."""


class NearVecError(Exception):
    """Base class for all errors raised by this package."""


class SpecError(NearVecError, ValueError):
    """A construction request is malformed."""


class NotPrime(SpecError):
    pass


class ReducibleModulus(SpecError):
    pass


class EvenCharacteristicDickson(SpecError):
    pass


class BadExponent(SpecError):
    pass


class AxiomFailure(NearVecError):
    """A constructed table violates a structural axiom.

    The offending report is attached as ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ZeroInverse(NearVecError, ZeroDivisionError):
    pass


class NotQuasiKernel(NearVecError, ValueError):
    pass


class ZeroBase(NearVecError, ValueError):
    pass


class ZeroVector(NearVecError, ValueError):
    pass


class NotGenerated(NearVecError):
    """A vector is not a finite sum of quasi-kernel elements."""


class NotNearVectorSpace(NearVecError):
    pass


class InSpan(NearVecError, ValueError):
    pass


class NotInSpan(NearVecError, ValueError):
    pass


class NotIndependent(NearVecError, ValueError):
    pass


class NotGenerating(NearVecError, ValueError):
    pass


class SpanViolation(NearVecError, ValueError):
    pass


class DegenerateInput(NearVecError, ValueError):
    pass


class NotSubspace(NearVecError, ValueError):
    pass


class NotLinear(NearVecError, ValueError):
    pass


class GroupMismatch(NearVecError, ValueError):
    pass


class NonFinite(NearVecError, ValueError):
    pass


class DefinitionError(NearVecError):
    """Raised while parsing a space-definition file."""


class DefinitionSyntaxError(DefinitionError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DefinitionSemanticError(DefinitionError):
    pass
