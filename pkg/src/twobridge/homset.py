"""Colorings of 2-bridge links by dihedral quandles, and their orbits under Aut(Z_n).

A coloring is pinned down by its seed pair [a, b] = (psi(x_{1,1}), psi(x_{1,2})).
The brute-force path propagates every one of the n**2 seeds through the strand
relations and keeps those that close up; the closed-form path uses the
divisibility criterion n | Delta (b - a).  Tests compare the two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Sequence, Tuple

import numpy as np

from .arith import Factorization, MultiIndex, factorize, gcd, p_adic_valuation
from .dihedral import AffineMap, all_automorphisms
from .tangle import Generator, TangleWord, determinant, strand_presentation


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    """A homomorphism Q(TB(word)) -> Z_n, identified by its seed pair [a, b].

    ``strands`` holds the value of every generator x_{j,i}; it is kept for
    verification and ignored by equality and hashing.
    """

    n: int
    a: int
    b: int
    strands: Mapping[Generator, int] = field(default_factory=dict, compare=False, hash=False, repr=False)

    @property
    def pair(self) -> Tuple[int, int]:
        return (self.a, self.b)

    @property
    def divisor(self) -> int:
        return gcd((self.b - self.a) % self.n, self.n)

    def is_trivial(self) -> bool:
        return self.a == self.b

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b}

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"


def _as_word(word) -> TangleWord:
    return word if isinstance(word, TangleWord) else TangleWord(tuple(word))


def _propagate(word: TangleWord, n: int, a, b):
    """Fill every strand from the seeds using twist and gluing relations only.

    Works on ints or on numpy arrays of seeds.  Returns (strands, closure_ok).
    """
    pres = strand_presentation(word)
    values: Dict[Generator, object] = {(1, 1): a % n, (1, 2): b % n}
    gluing = dict(pres.gluing)
    twist = {target: (left, right) for target, left, right in pres.twist}
    for gen in pres.generators:
        if gen in values:
            continue
        if gen in gluing:
            values[gen] = values[gluing[gen]]
        else:
            left, right = twist[gen]
            values[gen] = (2 * values[right] - values[left]) % n
    ok = True
    for lhs, rhs in pres.closure:
        ok = ok & (values[lhs] == values[rhs])
    return values, ok


def extend_coloring(word, n: int, a: int, b: int) -> Coloring:
    """The unique coloring with seeds (a, b); requires n | Delta (b - a)."""
    word = _as_word(word)
    a, b = a % n, b % n
    delta = determinant(word)
    if (delta * (b - a)) % n:
        raise ColoringError(
            f"[{a},{b}] does not extend over Z_{n}: {n} does not divide {delta}*({b}-{a})"
        )
    values, ok = _propagate(word, n, a, b)
    if not ok:  # pragma: no cover - would contradict the seed criterion
        raise ColoringError(f"closure relations fail for [{a},{b}] over Z_{n}")
    return Coloring(n, a, b, MappingProxyType({k: int(v) for k, v in values.items()}))


def accepted_seeds_bruteforce(word, n: int) -> list[Tuple[int, int]]:
    """Seeds (a, b) whose propagation satisfies both closure relations, in (a, b) order."""
    word = _as_word(word)
    a = np.repeat(np.arange(n, dtype=np.int64), n)
    b = np.tile(np.arange(n, dtype=np.int64), n)
    _, ok = _propagate(word, n, a, b)
    ok = np.broadcast_to(ok, a.shape)
    return [(int(x), int(y)) for x, y in zip(a[ok], b[ok])]


def enumerate_colorings_bruteforce(word, n: int) -> list[Coloring]:
    """Hom(Q(TB(word)), Z_n) by checking every seed pair against the closure relations."""
    word = _as_word(word)
    a = np.repeat(np.arange(n, dtype=np.int64), n)
    b = np.tile(np.arange(n, dtype=np.int64), n)
    values, ok = _propagate(word, n, a, b)
    idx = np.flatnonzero(np.broadcast_to(ok, a.shape))
    gens = list(values)
    cols = np.stack([np.broadcast_to(values[g], a.shape) for g in gens], axis=1)[idx]
    out = []
    for k, row in zip(idx, cols.tolist()):
        out.append(Coloring(n, int(a[k]), int(b[k]), MappingProxyType(dict(zip(gens, row)))))
    return out


def coloring_count_closed_form(delta: int, n: int) -> int:
    return n * gcd(delta, n)


def closed_form_seeds(word, n: int) -> list[Tuple[int, int]]:
    delta = determinant(_as_word(word))
    return [(a, b) for a in range(n) for b in range(n) if (delta * (b - a)) % n == 0]


def trivial_colorings(word, n: int) -> list[Coloring]:
    word = _as_word(word)
    gens = strand_presentation(word).generators
    return [Coloring(n, c, c, MappingProxyType({g: c for g in gens})) for c in range(n)]


def act(f: AffineMap, psi: Coloring) -> Coloring:
    """Post-composition f o psi = [f(a), f(b)]."""
    if f.n != psi.n:
        raise ValueError(f"map on Z_{f.n} cannot act on a coloring over Z_{psi.n}")
    strands = MappingProxyType({g: f.apply(v) for g, v in psi.strands.items()})
    return Coloring(psi.n, f.apply(psi.a), f.apply(psi.b), strands)


@dataclass(frozen=True)
class Orbit:
    representative: Coloring
    members: frozenset
    divisor: int

    @property
    def size(self) -> int:
        return len(self.members)

    def pairs(self) -> list[Tuple[int, int]]:
        return sorted(c.pair for c in self.members)


@dataclass(frozen=True)
class OrbitDecomposition:
    n: int
    orbits: Tuple[Orbit, ...]

    def orbit_of(self) -> Dict[Tuple[int, int], int]:
        """Seed pair -> index of its orbit."""
        return {c.pair: k for k, orb in enumerate(self.orbits) for c in orb.members}

    @property
    def sizes(self) -> list[int]:
        return [o.size for o in self.orbits]

    def to_json(self) -> list[dict]:
        return [
            {"divisor": o.divisor, "size": o.size, "members": [list(p) for p in o.pairs()]}
            for o in self.orbits
        ]


def orbit_decomposition(homset: Iterable[Coloring], n: int) -> OrbitDecomposition:
    """Partition a Hom-set into Aut(Z_n)-orbits, sorted by divisor label gcd(b - a, n)."""
    by_pair = {c.pair: c for c in homset}
    auts = all_automorphisms(n)
    seen = set()
    orbits = []
    for pair in sorted(by_pair):
        if pair in seen:
            continue
        start = by_pair[pair]
        a, b = pair
        members = {(f.apply(a), f.apply(b)) for f in auts}
        missing = sorted(members - by_pair.keys())
        if missing:
            raise ColoringError(f"Hom-set is not closed under Aut(Z_{n}): missing {list(missing[0])}")
        seen |= members
        labels = {gcd((b - a) % n, n) for a, b in members}
        if len(labels) != 1:  # pragma: no cover - automorphisms scale b - a by units
            raise ColoringError(f"orbit of {start} mixes divisor labels {sorted(labels)}")
        zero_based = sorted(p for p in members if p[0] == 0)
        if not zero_based:
            raise ColoringError(f"orbit of {start} has no member of the form [0, b]")
        rep = by_pair[zero_based[0]]
        orbits.append(Orbit(rep, frozenset(by_pair[p] for p in members), labels.pop()))
    orbits.sort(key=lambda o: o.divisor)
    return OrbitDecomposition(n, tuple(orbits))


# multi-index bookkeeping


def beta_indices(big_n: int, fact: Factorization) -> MultiIndex:
    """beta_i = min(alpha_i, v_{p_i}(N))."""
    return tuple(min(e, p_adic_valuation(p, big_n)) for p, e in fact.factors)


def orbit_index_set(big_n: int, n: int) -> list[MultiIndex]:
    """Lambda = {j : alpha - beta <= j <= alpha}, lexicographically sorted."""
    fact = factorize(n)
    alpha = fact.exponents
    beta = beta_indices(big_n, fact)
    ranges = [range(a - b, a + 1) for a, b in zip(alpha, beta)]
    return [tuple(j) for j in product(*ranges)]


def prime_orbit_size(p: int, alpha: int, j: int) -> int:
    if j < alpha:
        return p ** (2 * alpha - j - 1) * (p - 1)
    return p**alpha


def orbit_sizes_closed_form(big_n: int, n: int) -> Dict[MultiIndex, int]:
    fact = factorize(n)
    out = {}
    for j in orbit_index_set(big_n, n):
        size = 1
        for (p, alpha), ji in zip(fact.factors, j):
            size *= prime_orbit_size(p, alpha, ji)
        out[j] = size
    return out


def divisor_of(j: MultiIndex, n: int) -> int:
    return factorize(n).evaluate(j)


def multi_index_of(d: int, n: int) -> MultiIndex:
    """Inverse of divisor_of for a positive divisor d of n."""
    if d < 1 or n % d:
        raise ValueError(f"{d} is not a positive divisor of {n}")
    return tuple(p_adic_valuation(p, d) for p in factorize(n).primes)


def precedes(j: Sequence[int], k: Sequence[int]) -> bool:
    """Componentwise j <= k."""
    return all(x <= y for x, y in zip(j, k))
