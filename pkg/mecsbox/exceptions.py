from typing import Optional


class MecSboxError(Exception):
    """
    Base class for mecsbox errors.
    Subclasses should provide `.exit_code`, `.default_detail` and `.default_code` properties.
    """

    exit_code = 1
    default_detail = "A mecsbox error occurred."
    default_code = "error"

    def __init__(self, detail: Optional[str] = None, code: Optional[str] = None):
        self.detail = detail if detail is not None else self.default_detail
        self.code = code if code is not None else self.default_code
        super().__init__(self.detail)

    def __str__(self) -> str:
        return str(self.detail)


"""
Parameter errors
"""


class ParameterError(MecSboxError):
    exit_code = 2
    default_detail = "Invalid parameters."
    default_code = "invalid_parameters"


class NotPrime(ParameterError):
    default_detail = "p must be prime."
    default_code = "not_prime"


class WrongResidueClass(ParameterError):
    default_detail = "p must satisfy p mod 3 = 2."
    default_code = "wrong_residue_class"


class TooSmall(ParameterError):
    default_detail = "p must be at least 5."
    default_code = "too_small"


class PrimeTooSmall(ParameterError):
    default_detail = "p must be at least 257 to carry 256 points with y in [0, 255]."
    default_code = "prime_too_small"


class ParameterOutOfRange(ParameterError):
    default_detail = "Parameter out of range."
    default_code = "out_of_range"


class MixedCurves(ParameterError):
    default_detail = "Points belong to different curves."
    default_code = "mixed_curves"


class UnknownOrdering(ParameterError):
    default_detail = "Ordering must be one of N, D, M."
    default_code = "unknown_ordering"


class NotBijective(ParameterError):
    default_detail = "S-box table is not a permutation of 0..255."
    default_code = "not_bijective"


class UnwritableOutput(ParameterError):
    default_detail = "The output path cannot be written."
    default_code = "unwritable_output"


class InvalidInvocation(ParameterError):
    default_detail = "Invalid command line."
    default_code = "invalid_invocation"


"""
Input errors
"""


class InputFormatError(MecSboxError):
    exit_code = 3
    default_detail = "Malformed S-box input."
    default_code = "input_format"
