"""
GF(2^8) arithmetic under the AES reduction polynomial x^8 + x^4 + x^3 + x + 1, and the
interpolation polynomial of an S-box over that field.

Over the full domain the Lagrange basis collapses to L_a(X) = 1 - (X - a)^255, which gives
the coefficients directly:

    c_0   = S(0)
    c_k   = sum_{a != 0} S(a) * a^(255 - k)      for 1 <= k <= 254
    c_255 = sum_a S(a)
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from mecsbox.exceptions import ParameterOutOfRange
from mecsbox.sboxgen import SBOX_SIZE, SBox

AES_POLYNOMIAL = 0x11B
GENERATOR = 0x03
ORDER = SBOX_SIZE - 1


def gf_mul(a: int, b: int) -> int:
    """
    Carry-less product of a and b reduced modulo the AES polynomial.
    """
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        if a & 0x100:
            a ^= AES_POLYNOMIAL
        b >>= 1
    return result


def _build_tables() -> Tuple[np.ndarray, np.ndarray]:
    exp = np.zeros(2 * ORDER, dtype=np.int64)
    log = np.zeros(SBOX_SIZE, dtype=np.int64)
    v = 1
    for i in range(ORDER):
        exp[i] = exp[i + ORDER] = v
        log[v] = i
        v = gf_mul(v, GENERATOR)
    return exp, log


EXP, LOG = _build_tables()


def gf_inv(a: int) -> int:
    if a == 0:
        raise ParameterOutOfRange("0 has no inverse in GF(2^8).")
    return int(EXP[(ORDER - LOG[a]) % ORDER])


def gf_pow(a: int, k: int) -> int:
    if k == 0:
        return 1
    if a == 0:
        return 0
    return int(EXP[(int(LOG[a]) * k) % ORDER])


@dataclass(frozen=True)
class SboxPolynomial:
    """
    coeffs[k] multiplies x^k.
    """

    coeffs: Tuple[int, ...]

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = gf_mul(acc, x) ^ c
        return acc

    def nonzero_terms(self) -> List[Tuple[int, int]]:
        return [(k, c) for k, c in enumerate(self.coeffs) if c]

    @property
    def term_count(self) -> int:
        return sum(1 for c in self.coeffs if c)


def evaluate(poly: SboxPolynomial, x: int) -> int:
    return poly.evaluate(x)


def interpolate(sbox: "SBox | Sequence[int]") -> SboxPolynomial:
    values = np.asarray(list(sbox), dtype=np.int64)
    if values.shape != (SBOX_SIZE,):
        raise ParameterOutOfRange(f"Interpolation needs {SBOX_SIZE} values, got {values.shape[0]}.")

    coeffs = np.zeros(SBOX_SIZE, dtype=np.int64)
    coeffs[0] = values[0]
    coeffs[ORDER] = np.bitwise_xor.reduce(values)

    points = np.arange(1, SBOX_SIZE)
    nonzero = values[1:] != 0
    log_points = LOG[points[nonzero]]
    log_values = LOG[values[1:][nonzero]]
    if log_points.size:
        k = np.arange(1, ORDER)
        exponents = (log_values[None, :] + log_points[None, :] * (ORDER - k)[:, None]) % ORDER
        coeffs[1:ORDER] = np.bitwise_xor.reduce(EXP[exponents], axis=1)

    return SboxPolynomial(tuple(int(c) for c in coeffs))


def algebraic_complexity(sbox: "SBox | Sequence[int]") -> int:
    return interpolate(sbox).term_count
