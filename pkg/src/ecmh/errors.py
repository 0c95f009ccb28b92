"""Exception types shared across the library."""


class EcmhError(Exception):
    """Base class for all library errors."""


class ParameterMismatchError(EcmhError):
    """Operands belong to different parameter sets (field or curve)."""


class FieldDivisionError(EcmhError, ZeroDivisionError):
    """Inversion of the zero field element."""


class NoSolutionError(EcmhError):
    """Quadratic equation x^2 + x = c has no solution (trace(c) = 1)."""


class DecodeError(EcmhError, ValueError):
    """Byte string does not decode to a valid group element."""


class InvalidUpdateError(EcmhError, ValueError):
    """Multiset update with zero multiplicity delta."""


class UnsupportedAtScaleError(EcmhError):
    """Operation requires exhaustive enumeration and the field is too large."""


class NotInvertibleError(EcmhError):
    """Modular inverse does not exist (gcd with the modulus is not 1)."""


class AdversaryContractError(EcmhError):
    """A collision-finding adversary returned a multiset outside the kernel."""
