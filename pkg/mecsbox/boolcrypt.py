"""
Spectrum-based security metrics of an 8-bit S-box: NL, LAP, DAP, SAC and BIC.

Bit conventions: output bit i (1..8) of v is (v >> (i - 1)) & 1 and the single-bit
input flip alpha_j is 2^(j - 1). Arrays below are indexed from 0.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from mecsbox.exceptions import ParameterOutOfRange
from mecsbox.sboxgen import SBOX_SIZE, SBox

logger = logging.getLogger(__name__)

N_BITS = 8
_MASKS = np.arange(SBOX_SIZE, dtype=np.int64)
_SINGLE_BITS = 1 << np.arange(N_BITS, dtype=np.int64)
POPCOUNT = np.array([bin(v).count("1") for v in range(SBOX_SIZE)], dtype=np.int64)
PARITY = POPCOUNT & 1


def hamming_weight(v: int) -> int:
    if not 0 <= v < SBOX_SIZE:
        raise ParameterOutOfRange(f"Mask {v} is not in [0, 255].")
    return int(POPCOUNT[v])


def fwht(values: np.ndarray) -> np.ndarray:
    """
    Fast Walsh-Hadamard transform along axis 0 (Sylvester order, unnormalized).
    """
    n = values.shape[0]
    if n & (n - 1):
        raise ParameterOutOfRange(f"Transform length {n} is not a power of two.")
    out = np.array(values, dtype=np.int64).reshape(n, -1)
    h = 1
    while h < n:
        blocks = out.reshape(n // (2 * h), 2, h, -1)
        u, v = blocks[:, 0], blocks[:, 1]
        out = np.stack((u + v, u - v), axis=1).reshape(n, -1)
        h *= 2
    return out.reshape(values.shape)


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    """
    w[alpha][beta] = sum_x (-1)^(alpha.x xor beta.S(x)).
    """

    w: np.ndarray

    def max_abs(self) -> int:
        """
        Largest |w| over all input masks and the nonzero output masks.
        """
        return int(np.abs(self.w[:, 1:]).max())

    def nonlinearity(self) -> int:
        return SBOX_SIZE // 2 - self.max_abs() // 2

    def lap(self) -> Fraction:
        return Fraction(self.max_abs(), 2 * SBOX_SIZE)

    def coordinate_nonlinearities(self) -> List[int]:
        """
        NL of each output bit on its own, least significant bit first.
        """
        peaks = np.abs(self.w[:, _SINGLE_BITS]).max(axis=0)
        return [SBOX_SIZE // 2 - int(peak) // 2 for peak in peaks]

    def parseval_holds(self) -> bool:
        energy = (self.w[:, 1:] ** 2).sum(axis=0)
        return bool(np.all(energy == SBOX_SIZE * SBOX_SIZE))


@dataclass(frozen=True, eq=False)
class SacMatrix:
    """
    counts[i][j] = #{x : bit i of S(x ^ alpha_j) ^ S(x) is set}; m_ij = counts[i][j] / 256.
    """

    counts: np.ndarray
    denominator: int = SBOX_SIZE

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(int(self.counts[i][j]), self.denominator)

    @property
    def values(self) -> np.ndarray:
        return self.counts / self.denominator


@dataclass(frozen=True, eq=False)
class BicMatrix:
    """
    counts[i][k] sums, over the eight alpha_j, #{x : bits i and k of S(x ^ alpha_j) ^ S(x) differ}.
    n_ik = counts[i][k] / 2048, with a zero diagonal.
    """

    counts: np.ndarray
    denominator: int = SBOX_SIZE * N_BITS

    def entry(self, i: int, k: int) -> Fraction:
        return Fraction(int(self.counts[i][k]), self.denominator)

    @property
    def values(self) -> np.ndarray:
        return self.counts / self.denominator


class BicReading(str, Enum):
    PER_PAIR = "pair"
    PER_TRIPLE = "triple"

    @classmethod
    def parse(cls, value: "str | BicReading") -> "BicReading":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ParameterOutOfRange(f"Unknown BIC reading {value!r}; expected pair or triple.")


def walsh_spectrum(sbox: SBox) -> WalshSpectrum:
    table = sbox.as_array()
    components = 1 - 2 * PARITY[np.bitwise_and.outer(table, _MASKS)]
    return WalshSpectrum(fwht(components))


def nonlinearity(sbox: SBox) -> int:
    """
    Distance to the nearest affine function over every nonzero output mask.
    """
    return walsh_spectrum(sbox).nonlinearity()


def coordinate_nonlinearity(sbox: SBox) -> int:
    """
    Smallest NL among the eight coordinate functions.
    """
    return min(walsh_spectrum(sbox).coordinate_nonlinearities())


def linear_approximation_table(sbox: SBox) -> np.ndarray:
    """
    lat[alpha][beta] = #{x : alpha.x = beta.S(x)} - 128.
    """
    return walsh_spectrum(sbox).w // 2


def lap(sbox: SBox) -> Fraction:
    return walsh_spectrum(sbox).lap()


def difference_distribution_table(sbox: SBox) -> np.ndarray:
    """
    ddt[dx][dy] = #{x : S(x ^ dx) = S(x) ^ dy}.
    """
    table = sbox.as_array()
    dy = table[np.bitwise_xor.outer(_MASKS, _MASKS)] ^ table[None, :]
    flat = (_MASKS[:, None] * SBOX_SIZE + dy).ravel()
    return np.bincount(flat, minlength=SBOX_SIZE * SBOX_SIZE).reshape(SBOX_SIZE, SBOX_SIZE)


def dap(sbox: SBox) -> Fraction:
    return Fraction(int(difference_distribution_table(sbox)[1:].max()), SBOX_SIZE)


def _flip_bits(sbox: SBox) -> np.ndarray:
    """
    bits[j][x][i] = bit i of S(x ^ alpha_j) ^ S(x).
    """
    table = sbox.as_array()
    diffs = table[np.bitwise_xor.outer(_SINGLE_BITS, _MASKS)] ^ table[None, :]
    return (diffs[:, :, None] >> np.arange(N_BITS)) & 1


def sac_matrix(sbox: SBox) -> SacMatrix:
    counts = _flip_bits(sbox).sum(axis=1).T
    return SacMatrix(counts)


def sac_minmax(sbox: SBox) -> Tuple[Fraction, Fraction]:
    counts = sac_matrix(sbox).counts
    return Fraction(int(counts.max()), SBOX_SIZE), Fraction(int(counts.min()), SBOX_SIZE)


def sac_mean(sbox: SBox) -> float:
    return float(sac_matrix(sbox).values.mean())


def _bic_triple_counts(sbox: SBox) -> np.ndarray:
    """
    counts[j][i][k] = #{x : bits i and k of S(x ^ alpha_j) ^ S(x) differ}.
    """
    bits = _flip_bits(sbox)
    return (bits[:, :, :, None] ^ bits[:, :, None, :]).sum(axis=1)


def bic_matrix(sbox: SBox) -> BicMatrix:
    return BicMatrix(_bic_triple_counts(sbox).sum(axis=0))


def bic_minmax(sbox: SBox, reading: BicReading = BicReading.PER_PAIR) -> Tuple[Fraction, Fraction]:
    """
    (max, min) over the off-diagonal BIC values.

    PER_PAIR averages each output-bit pair over the eight input flips; PER_TRIPLE keeps every
    (i, k, alpha_j) separately.
    """
    off_diagonal = ~np.eye(N_BITS, dtype=bool)
    if BicReading.parse(reading) is BicReading.PER_PAIR:
        counts = bic_matrix(sbox).counts[off_diagonal]
        denominator = SBOX_SIZE * N_BITS
    else:
        counts = _bic_triple_counts(sbox)[:, off_diagonal]
        denominator = SBOX_SIZE
    return Fraction(int(counts.max()), denominator), Fraction(int(counts.min()), denominator)
