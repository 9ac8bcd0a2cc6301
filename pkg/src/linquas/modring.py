"""Exact arithmetic in the ring of integers modulo n."""

from __future__ import annotations

import math
from dataclasses import dataclass


class NotAUnitError(ValueError):
    """Requested a modular inverse of a residue that is not a unit."""


def gcd(u: int, v: int) -> int:
    """Greatest common divisor of two non-negative integers, not both zero."""
    if u < 0 or v < 0:
        raise ValueError(f"gcd arguments must be non-negative, got ({u}, {v})")
    if u == 0 and v == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(u, v)


def is_unit(v: int, n: int) -> bool:
    return math.gcd(v % n, n) == 1


def inverse_mod(v: int, n: int) -> int:
    """Inverse of v modulo n; raises NotAUnitError when gcd(v, n) != 1."""
    try:
        return pow(v % n, -1, n)
    except ValueError:
        raise NotAUnitError(f"{v % n} is not a unit mod {n}") from None


def solve_linear(k: int, rhs: int, n: int) -> tuple[int, ...]:
    """All s in Z_n with k*s = rhs (mod n), sorted ascending.

    The solution set is empty when gcd(k, n) does not divide rhs, and has
    exactly gcd(k, n) elements otherwise.
    """
    k %= n
    rhs %= n
    d = math.gcd(k, n)
    if d == 0:
        # k = 0 mod n: either every residue solves it or none does.
        return tuple(range(n)) if rhs == 0 else ()
    if rhs % d:
        return ()
    m = n // d
    base = (rhs // d) * pow((k // d) % m, -1, m) % m
    return tuple(base + t * m for t in range(d))


def is_prime(n: int) -> bool:
    """Trial-division primality test, intended for desk-scale n (<= 10**6)."""
    if n < 2:
        raise ValueError(f"primality is defined here for n >= 2, got {n}")
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def primes_in(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi."""
    return [p for p in range(max(lo, 2), hi + 1) if is_prime(p)]


@dataclass(frozen=True)
class Modulus:
    """A ring modulus n >= 2; n = 1 is rejected as degenerate."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"modulus must be >= 2, got {self.n}")


@dataclass(frozen=True)
class Residue:
    """A canonical representative in [0, n) of an element of Z_n."""

    value: int
    modulus: Modulus

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.modulus.n)

    @property
    def n(self) -> int:
        return self.modulus.n

    def _coerce(self, other: Residue | int) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli in residue arithmetic")
            return other.value
        return other % self.n

    def __add__(self, other: Residue | int) -> Residue:
        return Residue(self.value + self._coerce(other), self.modulus)

    def __sub__(self, other: Residue | int) -> Residue:
        return Residue(self.value - self._coerce(other), self.modulus)

    def __mul__(self, other: Residue | int) -> Residue:
        return Residue(self.value * self._coerce(other), self.modulus)

    def __neg__(self) -> Residue:
        return Residue(-self.value, self.modulus)

    def __int__(self) -> int:
        return self.value

    def is_unit(self) -> bool:
        return is_unit(self.value, self.n)

    def inverse(self) -> Residue:
        return Residue(inverse_mod(self.value, self.n), self.modulus)


def residue(value: int, n: int) -> Residue:
    return Residue(value, Modulus(n))
