"""
Arithmetic over the prime field F_p for primes p = 2 (mod 3).

Cubing is a bijection on such fields, so every element has exactly one cube root,
computed as a^((2p - 1) / 3).
"""
from dataclasses import dataclass
from typing import Union

from mecsbox.exceptions import NotPrime, ParameterOutOfRange, TooSmall, WrongResidueClass

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """
    Deterministic Miller-Rabin; the fixed witness set is exact for n < 3.3e24.
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldPrime:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"p={self.p} is not prime.")
        if self.p % 3 != 2:
            raise WrongResidueClass(f"p={self.p} has p mod 3 = {self.p % 3}, expected 2.")
        if self.p < 5:
            raise TooSmall(f"p={self.p} is below 5.")

    def __int__(self) -> int:
        return self.p

    @property
    def cube_root_exponent(self) -> int:
        return (2 * self.p - 1) // 3

    def element(self, value: int) -> "FieldElement":
        """
        Returns the canonical representative of `value` in [0, p - 1].
        """
        return FieldElement(value % self.p, self)


@dataclass(frozen=True)
class FieldElement:
    value: int
    prime: FieldPrime

    def __post_init__(self):
        if not 0 <= self.value < self.prime.p:
            raise ParameterOutOfRange(f"{self.value} is not in [0, {self.prime.p - 1}].")

    def _coerce(self, other: Union["FieldElement", int]) -> int:
        if isinstance(other, FieldElement):
            if other.prime != self.prime:
                raise ParameterOutOfRange(f"Cannot mix elements of F_{self.prime.p} and F_{other.prime.p}.")
            return other.value
        return other

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __add__(self, other: Union["FieldElement", int]) -> "FieldElement":
        return self.prime.element(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Union["FieldElement", int]) -> "FieldElement":
        return self.prime.element(self.value - self._coerce(other))

    def __rsub__(self, other: int) -> "FieldElement":
        return self.prime.element(other - self.value)

    def __mul__(self, other: Union["FieldElement", int]) -> "FieldElement":
        return self.prime.element(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> "FieldElement":
        return self.prime.element(-self.value)

    def __pow__(self, exp: int) -> "FieldElement":
        return mod_pow(self, exp)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.prime == other.prime and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.prime.p})"


def validate_prime(p: int) -> FieldPrime:
    """
    Validates p in the order: primality, residue class, size.
    """
    return FieldPrime(p)


def mod_pow(base: FieldElement, exp: int) -> FieldElement:
    if exp < 0:
        raise ParameterOutOfRange("Exponent must be non-negative.")
    return FieldElement(pow(base.value, exp, base.prime.p), base.prime)


def cube_root_int(a: int, p: int) -> int:
    """
    Unique cube root of `a` modulo a prime p = 2 (mod 3), on plain integers.
    """
    return pow(a % p, (2 * p - 1) // 3, p)


def cube_root(a: FieldElement) -> FieldElement:
    return FieldElement(cube_root_int(a.value, a.prime.p), a.prime)


def cube_root_by_search(a: FieldElement) -> FieldElement:
    p = a.prime.p
    for x in range(p):
        if pow(x, 3, p) == a.value:
            return FieldElement(x, a.prime)
    raise ParameterOutOfRange(f"{a!r} has no cube root.")  # pragma: no cover
