"""Exception hierarchy shared by all subpackages."""


class Fermat3F2Error(Exception):
    """Base class for every error raised by this package."""


# characters
class InvalidTuple(Fermat3F2Error, ValueError):
    pass


class NotHodge(Fermat3F2Error, ValueError):
    pass


# symbolic
class DivisionNearZero(Fermat3F2Error, ZeroDivisionError):
    pass


class BranchAmbiguity(Fermat3F2Error, ValueError):
    pass


class PoleOnPath(Fermat3F2Error, ValueError):
    pass


class InvalidExponent(Fermat3F2Error, ValueError):
    pass


class RepeatedRoot(Fermat3F2Error, ValueError):
    pass


class NonConvergent(Fermat3F2Error, ValueError):
    pass


class TrigPole(Fermat3F2Error, ZeroDivisionError):
    pass


class ParseError(Fermat3F2Error, ValueError):
    pass


# numerics
class Divergent(Fermat3F2Error, ValueError):
    pass


class ToleranceNotMet(Fermat3F2Error, ArithmeticError):
    def __init__(self, message, value=None, error=None):
        super().__init__(message)
        self.value = value
        self.error = error


class IntegerAlpha(Fermat3F2Error, ValueError):
    pass


class BadRadius(Fermat3F2Error, ValueError):
    pass


# identities
class UnknownIdentity(Fermat3F2Error, KeyError):
    pass


class VerificationFailed(Fermat3F2Error, AssertionError):
    def __init__(self, record):
        super().__init__(f"verification failed for {record.identity_id} at {record.parameters}")
        self.record = record
