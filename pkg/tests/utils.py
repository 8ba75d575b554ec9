from typing import List

import numpy as np

from mecsbox.sboxgen import SBOX_SIZE, SBox


"""
S-boxes
"""


def random_permutation(seed: int) -> SBox:
    return SBox(tuple(int(v) for v in np.random.default_rng(seed).permutation(SBOX_SIZE)))


def read_grid(text: str) -> List[int]:
    return [int(token) for token in text.split()]


"""
Brute-force oracles
"""


def parity(v: int) -> int:
    return bin(v).count("1") & 1


def naive_lat_entry(sbox: SBox, alpha: int, beta: int) -> int:
    matches = sum(map(lambda x: parity(alpha & x) == parity(beta & sbox[x]), range(SBOX_SIZE)))
    return matches - SBOX_SIZE // 2


def naive_ddt(sbox: SBox) -> List[List[int]]:
    ddt = [[0] * SBOX_SIZE for _ in range(SBOX_SIZE)]
    for x in range(SBOX_SIZE):
        for dx in range(SBOX_SIZE):
            ddt[dx][sbox[x ^ dx] ^ sbox[x]] += 1
    return ddt


def naive_sac_count(sbox: SBox, i: int, j: int) -> int:
    return sum((sbox[x ^ (1 << j)] ^ sbox[x]) >> i & 1 for x in range(SBOX_SIZE))


def naive_lat(sbox: SBox) -> np.ndarray:
    """
    lat[alpha][beta] = #{x : alpha.x = beta.S(x)} - 128, counted directly.
    """
    xs = np.arange(SBOX_SIZE)
    inputs = np.array([[parity(alpha & x) for x in xs] for alpha in xs], dtype=np.int8)
    outputs = np.array([[parity(beta & sbox[x]) for x in xs] for beta in xs], dtype=np.int8)
    matches = (inputs[:, None, :] == outputs[None, :, :]).sum(axis=2)
    return matches - SBOX_SIZE // 2
