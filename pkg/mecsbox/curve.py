"""
Mordell curves E: y^2 = x^3 + b over F_p with p = 2 (mod 3).

Every y in [0, p - 1] belongs to exactly one affine point, so the curve has p affine
points and p + 1 points in total once the point at infinity is counted. The point at
infinity never enters an S-box and is not materialized.
"""
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

from mecsbox.exceptions import ParameterOutOfRange
from mecsbox.modmath import FieldElement, FieldPrime, cube_root_int, validate_prime

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurveParams:
    prime: FieldPrime
    b: int

    def __post_init__(self):
        if not 0 <= self.b < self.prime.p:
            raise ParameterOutOfRange(f"b={self.b} is not in [0, {self.prime.p - 1}].")

    @classmethod
    def create(cls, p: int, b: int) -> "CurveParams":
        return cls(validate_prime(p), b)

    @property
    def p(self) -> int:
        return self.prime.p

    @property
    def a(self) -> int:
        return 0

    def __str__(self) -> str:
        return f"E({self.p}, {self.b})"


@dataclass(frozen=True)
class AffinePoint:
    curve: CurveParams
    x: int
    y: int

    def __post_init__(self):
        if not contains(self.curve, self.x, self.y):
            raise ParameterOutOfRange(f"({self.x}, {self.y}) is not on {self.curve}.")

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self) -> str:
        return f"({self.x}, {self.y})"


def _as_int(value: Union[FieldElement, int]) -> int:
    return value.value if isinstance(value, FieldElement) else value


def contains(params: CurveParams, x: int, y: int) -> bool:
    p = params.p
    if not (0 <= x < p and 0 <= y < p):
        return False
    return (y * y - x * x * x - params.b) % p == 0


def solve_x_for_y(params: CurveParams, y: Union[FieldElement, int]) -> AffinePoint:
    """
    Returns the unique point with the given y-coordinate, x = cbrt(y^2 - b).
    """
    y = _as_int(y)
    p = params.p
    if not 0 <= y < p:
        raise ParameterOutOfRange(f"y={y} is not in [0, {p - 1}].")
    return AffinePoint(params, cube_root_int(y * y - params.b, p), y)


def solve_x_for_y_loop(params: CurveParams, y: Union[FieldElement, int]) -> AffinePoint:
    """
    Same contract as `solve_x_for_y`, found by scanning x over [0, p - 1].
    """
    y = _as_int(y)
    p, b = params.p, params.b
    if not 0 <= y < p:
        raise ParameterOutOfRange(f"y={y} is not in [0, {p - 1}].")

    target = y * y % p
    for x in range(p):
        if (x * x * x + b) % p == target:
            return AffinePoint(params, x, y)
    raise ParameterOutOfRange(f"No point with y={y} on {params}.")  # pragma: no cover


def enumerate_points(params: CurveParams) -> List[AffinePoint]:
    """
    All p affine points, in increasing y.
    """
    logger.debug("Enumerating %d points of %s", params.p, params)
    return [solve_x_for_y(params, y) for y in range(params.p)]


def point_count(params: CurveParams) -> int:
    """
    Number of points including the point at infinity.
    """
    return len(enumerate_points(params)) + 1


def hasse_bound_holds(params: CurveParams) -> bool:
    return abs(point_count(params) - params.p - 1) <= 2 * math.sqrt(params.p)


def x_coordinates_pairing(params: CurveParams) -> Dict[int, Tuple[int, ...]]:
    """
    Maps each x that occurs on the curve to its sorted y-values.
    """
    pairing = defaultdict(list)
    for point in enumerate_points(params):
        pairing[point.x].append(point.y)
    return {x: tuple(sorted(ys)) for x, ys in pairing.items()}
