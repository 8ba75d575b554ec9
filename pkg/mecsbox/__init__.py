from .curve import AffinePoint, CurveParams
from .exceptions import InputFormatError, MecSboxError, ParameterError
from .modmath import FieldElement, FieldPrime
from .ordering import OrderingKind
from .sboxgen import SBox, generate

__version__ = "0.1.0"

__all__ = [
    "AffinePoint",
    "CurveParams",
    "FieldElement",
    "FieldPrime",
    "InputFormatError",
    "MecSboxError",
    "OrderingKind",
    "ParameterError",
    "SBox",
    "generate",
]
