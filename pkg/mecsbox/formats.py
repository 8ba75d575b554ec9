"""
S-box file formats.

* grid: 16 rows of 16 space-separated decimals, row-major
* json: {"p": int, "b": int, "ordering": "N|D|M", "table": [256 ints], "version": 1}
* bin:  exactly 256 bytes, table[i] at offset i
"""
from enum import Enum
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, ValidationError

from mecsbox.exceptions import InputFormatError, ParameterOutOfRange
from mecsbox.ordering import OrderingKind
from mecsbox.sboxgen import SBOX_SIZE, Provenance, SBox

GRID_WIDTH = 16


class SboxFormat(str, Enum):
    GRID = "grid"
    JSON = "json"
    BIN = "bin"

    @classmethod
    def parse(cls, value: "str | SboxFormat") -> "SboxFormat":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ParameterOutOfRange(f"Unknown format {value!r}; expected grid, json or bin.")


_SUFFIXES = {
    ".txt": SboxFormat.GRID,
    ".grid": SboxFormat.GRID,
    ".json": SboxFormat.JSON,
    ".bin": SboxFormat.BIN,
}


class SboxDocument(BaseModel):
    p: Optional[int] = None
    b: Optional[int] = None
    ordering: Optional[Literal["N", "D", "M"]] = None
    table: List[int] = Field(min_length=SBOX_SIZE, max_length=SBOX_SIZE)
    version: Literal[1] = 1

    @classmethod
    def from_sbox(cls, sbox: SBox) -> "SboxDocument":
        provenance = sbox.provenance
        if provenance is None:
            return cls(table=list(sbox))
        return cls(p=provenance.p, b=provenance.b, ordering=provenance.ordering.value, table=list(sbox))

    def to_sbox(self) -> SBox:
        provenance = None
        if self.p is not None and self.b is not None and self.ordering is not None:
            provenance = Provenance(self.p, self.b, OrderingKind.parse(self.ordering))
        return SBox(tuple(self.table), provenance)


def detect_format(path: Path) -> SboxFormat:
    try:
        return _SUFFIXES[Path(path).suffix.lower()]
    except KeyError:
        raise InputFormatError(f"Cannot infer the format of {path}; pass --format.")


def dumps(sbox: SBox, fmt: SboxFormat = SboxFormat.GRID) -> bytes:
    fmt = SboxFormat.parse(fmt)
    if fmt is SboxFormat.BIN:
        return bytes(sbox.table)
    if fmt is SboxFormat.JSON:
        return (SboxDocument.from_sbox(sbox).model_dump_json() + "\n").encode()

    rows = (sbox.table[i : i + GRID_WIDTH] for i in range(0, SBOX_SIZE, GRID_WIDTH))
    return "".join(" ".join(str(v) for v in row) + "\n" for row in rows).encode()


def loads(payload: bytes, fmt: SboxFormat = SboxFormat.GRID) -> SBox:
    fmt = SboxFormat.parse(fmt)
    if fmt is SboxFormat.BIN:
        if len(payload) != SBOX_SIZE:
            raise InputFormatError(f"Binary S-box must be {SBOX_SIZE} bytes, got {len(payload)}.")
        return SBox(tuple(payload))

    if fmt is SboxFormat.JSON:
        try:
            return SboxDocument.model_validate_json(payload).to_sbox()
        except ValidationError as exc:
            raise InputFormatError(f"Invalid S-box document: {exc.errors()[0]['msg']}")

    try:
        values = [int(token) for token in payload.decode().split()]
    except (UnicodeDecodeError, ValueError):
        raise InputFormatError("Grid S-box must contain only decimal integers.")
    return SBox(tuple(values))


def read_sbox(path: Path, fmt: Optional[SboxFormat] = None) -> SBox:
    path = Path(path)
    fmt = SboxFormat.parse(fmt) if fmt is not None else detect_format(path)
    try:
        payload = path.read_bytes()
    except OSError as exc:
        raise InputFormatError(f"Cannot read {path}: {exc.strerror}")
    return loads(payload, fmt)


def write_sbox(sbox: SBox, path: Path, fmt: Optional[SboxFormat] = None) -> None:
    path = Path(path)
    fmt = SboxFormat.parse(fmt) if fmt is not None else detect_format(path)
    path.write_bytes(dumps(sbox, fmt))
