import logging
from dataclasses import dataclass, field
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from mecsbox.curve import AffinePoint, CurveParams, solve_x_for_y, solve_x_for_y_loop
from mecsbox.exceptions import InputFormatError, NotBijective, PrimeTooSmall
from mecsbox.ordering import OrderingKind, sort_points

logger = logging.getLogger(__name__)

SBOX_SIZE = 256
MIN_GENERATION_PRIME = 257


@dataclass(frozen=True)
class Provenance:
    p: int
    b: int
    ordering: OrderingKind

    @property
    def tag(self) -> str:
        return f"S^{self.ordering.value}_{{{self.p},{self.b}}}"


@dataclass(frozen=True)
class SBox:
    table: Tuple[int, ...]
    provenance: Optional[Provenance] = field(default=None, compare=False)

    def __post_init__(self):
        table = tuple(int(v) for v in self.table)
        if len(table) != SBOX_SIZE:
            raise InputFormatError(f"S-box must have {SBOX_SIZE} entries, got {len(table)}.")
        bad = [v for v in table if not 0 <= v < SBOX_SIZE]
        if bad:
            raise InputFormatError(f"S-box entries must lie in [0, 255], got {bad[0]}.")
        object.__setattr__(self, "table", table)

    @classmethod
    def identity(cls) -> "SBox":
        return cls(tuple(range(SBOX_SIZE)))

    def __getitem__(self, index: int) -> int:
        return self.table[index]

    def __len__(self) -> int:
        return SBOX_SIZE

    def __iter__(self) -> Iterator[int]:
        return iter(self.table)

    @property
    def is_bijective(self) -> bool:
        return is_bijective(self.table)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)


class GenerationTrace:
    """
    Counts the points held while an S-box is being generated.
    """

    def __init__(self):
        self.current = 0
        self.peak = 0

    def store(self, buffer: List[AffinePoint], point: AffinePoint) -> None:
        buffer.append(point)
        self.current = len(buffer)
        self.peak = max(self.peak, self.current)

    def release(self) -> None:
        self.current = 0


def is_bijective(table: Sequence[int]) -> bool:
    return len(table) == SBOX_SIZE and set(table) == set(range(SBOX_SIZE))


def validate_generation_params(p: int, b: int) -> CurveParams:
    """
    Builds curve parameters for generation, checking the 257 lower bound before the field checks.
    """
    if p < MIN_GENERATION_PRIME:
        raise PrimeTooSmall(f"p={p} is below {MIN_GENERATION_PRIME}.")
    return CurveParams.create(p, b)


def _build(
    params: CurveParams,
    kind: OrderingKind,
    solver: Callable[[CurveParams, int], AffinePoint],
    trace: Optional[GenerationTrace],
) -> SBox:
    if params.p < MIN_GENERATION_PRIME:
        raise PrimeTooSmall(f"p={params.p} is below {MIN_GENERATION_PRIME}.")
    kind = OrderingKind.parse(kind)
    trace = trace if trace is not None else GenerationTrace()

    selected: List[AffinePoint] = []
    for y in range(SBOX_SIZE):
        trace.store(selected, solver(params, y))

    table = tuple(point.y for point in sort_points(kind, selected))
    trace.release()

    logger.debug("Generated S-box for %s under %s (peak %d points)", params, kind.value, trace.peak)
    return SBox(table, Provenance(params.p, params.b, kind))


def generate(params: CurveParams, kind: OrderingKind, trace: Optional[GenerationTrace] = None) -> SBox:
    """
    Selects the 256 points with y in [0, 255], sorts them under `kind` and emits their y-coordinates.
    """
    return _build(params, kind, solve_x_for_y, trace)


def generate_via_loop(params: CurveParams, kind: OrderingKind, trace: Optional[GenerationTrace] = None) -> SBox:
    """
    Same output as `generate`, solving each point by a linear scan over x.
    """
    return _build(params, kind, solve_x_for_y_loop, trace)


def inverse(sbox: SBox) -> SBox:
    if not sbox.is_bijective:
        raise NotBijective()
    table = [0] * SBOX_SIZE
    for i, v in enumerate(sbox):
        table[v] = i
    return SBox(tuple(table))
