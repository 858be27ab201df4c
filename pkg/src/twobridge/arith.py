"""Exact integer and modular arithmetic used across the package."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

MultiIndex = Tuple[int, ...]


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization: ``factors`` is ((p, alpha), ...) with p increasing."""

    factors: Tuple[Tuple[int, int], ...]

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> MultiIndex:
        return tuple(e for _, e in self.factors)

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def evaluate(self, j: MultiIndex) -> int:
        """The divisor prod(p_i ** j_i) for a multi-index of matching length."""
        if len(j) != len(self.factors):
            raise ValueError(f"multi-index {j} does not match {len(self.factors)} primes")
        out = 1
        for (p, _), ji in zip(self.factors, j):
            out *= p**ji
        return out

    def __len__(self) -> int:
        return len(self.factors)


def gcd(a: int, b: int) -> int:
    # math.gcd already gives gcd(0, n) == n
    return math.gcd(a, b)


def p_adic_valuation(p: int, m: int) -> int:
    """Largest k with p**k dividing m."""
    if m == 0:
        raise ValueError("valuation of 0 is infinite")
    if p < 2:
        raise ValueError(f"{p} is not a prime")
    m = abs(m)
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return k


def factorize(n: int) -> Factorization:
    """Trial-division factorization; fine for the small moduli used here."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return Factorization(tuple(factors))


def euler_totient(n: int) -> int:
    if n < 1:
        raise ValueError(f"totient undefined for {n}")
    out = 1
    for p, e in factorize(n).factors:
        out *= p ** (e - 1) * (p - 1)
    return out


def solve_linear_congruence(a: int, b: int, n: int) -> list[int]:
    """All x in range(n) with a*x == b (mod n), in increasing order."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    a %= n
    b %= n
    d = math.gcd(a, n)
    if b % d:
        return []
    step = n // d
    # a/d is a unit mod n/d; for step == 1 every x works
    x0 = (b // d) * pow(a // d, -1, step) % step if step > 1 else 0
    return [x0 + k * step for k in range(d)]
