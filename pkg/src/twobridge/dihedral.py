"""The dihedral quandle Z_n with x |> y = 2y - x, and its affine endomorphisms."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: Largest n for which verify_affine_completeness walks all n**n self-maps.
EXHAUSTIVE_LIMIT = 7


@dataclass(frozen=True)
class DihedralQuandle:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")

    def op(self, x: int, y: int) -> int:
        return (2 * y - x) % self.n

    def elements(self) -> range:
        return range(self.n)


def op(q: DihedralQuandle, x: int, y: int) -> int:
    return q.op(x, y)


@dataclass(frozen=True)
class AffineMap:
    """The endomorphism [[x, y]] sending 0 to x and 1 to y, i.e. a -> (y - x) a + x."""

    n: int
    x: int
    y: int

    def __post_init__(self):
        object.__setattr__(self, "x", self.x % self.n)
        object.__setattr__(self, "y", self.y % self.n)

    @property
    def slope(self) -> int:
        return (self.y - self.x) % self.n

    def apply(self, a: int) -> int:
        return (self.slope * a + self.x) % self.n

    __call__ = apply

    def is_automorphism(self) -> bool:
        return math.gcd(self.slope, self.n) == 1

    @classmethod
    def identity(cls, n: int) -> "AffineMap":
        return cls(n, 0, 1)

    @classmethod
    def constant(cls, n: int, c: int) -> "AffineMap":
        return cls(n, c, c)

    def __str__(self) -> str:
        return f"[[{self.x},{self.y}]]"


def all_endomorphisms(q: DihedralQuandle | int) -> list[AffineMap]:
    n = q.n if isinstance(q, DihedralQuandle) else q
    return [AffineMap(n, x, y) for x in range(n) for y in range(n)]


def all_automorphisms(q: DihedralQuandle | int) -> list[AffineMap]:
    return [f for f in all_endomorphisms(q) if f.is_automorphism()]


def compose(f: AffineMap, g: AffineMap) -> AffineMap:
    """f after g."""
    if f.n != g.n:
        raise ValueError(f"cannot compose maps on Z_{f.n} and Z_{g.n}")
    return AffineMap(f.n, f.apply(g.x), f.apply(g.y))


def invert(f: AffineMap) -> AffineMap:
    if not f.is_automorphism():
        raise ValueError(f"{f} is not an automorphism of Z_{f.n}")
    if f.n == 1:
        return f
    inv_slope = pow(f.slope, -1, f.n)
    # a = inv_slope * (b - x)
    x = (-inv_slope * f.x) % f.n
    return AffineMap(f.n, x, x + inv_slope)


def exhaustive_endomorphisms(q: DihedralQuandle | int) -> list[tuple[int, ...]]:
    """Every self-map of Z_n (as its value table) that respects the quandle operation.

    Walks all n**n functions; refuses n above EXHAUSTIVE_LIMIT.
    """
    n = q.n if isinstance(q, DihedralQuandle) else q
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if n > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive search is limited to n <= {EXHAUSTIVE_LIMIT}, got {n}")
    # row k of table is the base-n digits of k: table[k, a] = f_k(a)
    count = n**n
    codes = np.arange(count, dtype=np.int64)
    table = np.empty((count, n), dtype=np.int64)
    for a in range(n):
        table[:, a] = (codes // n**a) % n
    ok = np.ones(count, dtype=bool)
    for a in range(n):
        for b in range(n):
            lhs = table[:, (2 * b - a) % n]
            rhs = (2 * table[:, b] - table[:, a]) % n
            ok &= lhs == rhs
    return [tuple(int(v) for v in row) for row in table[ok]]


def verify_affine_completeness(q: DihedralQuandle | int) -> bool:
    """True iff the endomorphisms found by exhaustive search are exactly the n**2 affine maps."""
    n = q.n if isinstance(q, DihedralQuandle) else q
    found = set(exhaustive_endomorphisms(n))
    affine = {tuple(f.apply(a) for a in range(n)) for f in all_endomorphisms(n)}
    return found == affine
