"""Exception hierarchy shared by every module of the package."""


class HyperencError(Exception):
    """Base class for all package errors."""


class FieldError(HyperencError, ValueError):
    pass


class NotPrime(FieldError):
    pass


class EvenModulus(FieldError):
    pass


class FieldMismatch(FieldError):
    """Operands belong to different prime fields."""


class CapabilityMissing(FieldError):
    """The field lacks a property an operation needs (q = 2 mod 3, gcd(d, q-1) = 1)."""


class FieldDivisionByZero(HyperencError, ZeroDivisionError):
    pass


class NoSquareRoot(FieldError):
    pass


class DegenerateCurve(HyperencError, ValueError):
    """A curve parameter set violates one of the family's nondegeneracy conditions."""

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class Undefined(HyperencError, ValueError):
    """An invariant or prediction is not defined at the given parameters."""


class NotEncodable(HyperencError):
    """The encoder cannot map this input; ``stage`` names the failing step."""

    def __init__(self, stage):
        super().__init__(f"not encodable: {stage}")
        self.stage = stage


class NoPreimage(HyperencError):
    pass


class NoRationalRoot(HyperencError):
    pass


class EmptyDivisor(HyperencError):
    pass


class FieldTooLarge(HyperencError, ValueError):
    pass


class HashFailure(HyperencError):
    pass


class VerificationFailure(HyperencError, AssertionError):
    """A census check did not hold; carries the offending modulus, curve and quantity."""

    def __init__(self, q, params, quantity, observed, bound):
        super().__init__(
            f"q={q} params={params}: {quantity}={observed} violates bound {bound}"
        )
        self.q = q
        self.params = params
        self.quantity = quantity
        self.observed = observed
        self.bound = bound
