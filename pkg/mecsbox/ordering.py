"""
Total orders on the affine points of a Mordell curve.

Each order is lexicographic on a key:

* Natural (N):          (x, y)
* Diffusion (D):        (x + y, x), the sum taken over the integers
* ModuloDiffusion (M):  ((x + y) mod p, x)

Two distinct points never share a key, so every comparison between distinct points is strict.
"""
from enum import Enum, IntEnum
from typing import Callable, Iterable, List, Sequence, Tuple

from mecsbox.curve import AffinePoint, CurveParams
from mecsbox.exceptions import MixedCurves, UnknownOrdering

SortKey = Callable[[AffinePoint], Tuple[int, int]]


class OrderingKind(str, Enum):
    NATURAL = "N"
    DIFFUSION = "D"
    MODULO_DIFFUSION = "M"

    @classmethod
    def parse(cls, code: "str | OrderingKind") -> "OrderingKind":
        if isinstance(code, cls):
            return code
        text = str(code).strip()
        for kind in cls:
            if text.upper() == kind.value or text.upper().replace("-", "_") == kind.name:
                return kind
        raise UnknownOrdering(f"Unknown ordering {code!r}; expected one of N, D, M.")

    def __str__(self) -> str:
        return self.value


class Comparison(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def sort_key(kind: OrderingKind, p: int) -> SortKey:
    kind = OrderingKind.parse(kind)
    if kind is OrderingKind.NATURAL:
        return lambda point: (point.x, point.y)
    if kind is OrderingKind.DIFFUSION:
        return lambda point: (point.x + point.y, point.x)
    return lambda point: ((point.x + point.y) % p, point.x)


def _common_curve(points: Iterable[AffinePoint]) -> CurveParams:
    curve = None
    for point in points:
        if curve is None:
            curve = point.curve
        elif point.curve != curve:
            raise MixedCurves(f"{point!r} lies on {point.curve}, expected {curve}.")
    return curve


def compare(kind: OrderingKind, p1: AffinePoint, p2: AffinePoint) -> Comparison:
    curve = _common_curve((p1, p2))
    key = sort_key(kind, curve.p)
    k1, k2 = key(p1), key(p2)
    if k1 < k2:
        return Comparison.LESS
    if k1 > k2:
        return Comparison.GREATER
    return Comparison.EQUAL


def sort_points(kind: OrderingKind, points: Sequence[AffinePoint]) -> List[AffinePoint]:
    curve = _common_curve(points)
    if curve is None:
        return []
    return sorted(points, key=sort_key(kind, curve.p))
