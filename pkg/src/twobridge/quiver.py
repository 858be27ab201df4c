"""Full quandle coloring quivers of 2-bridge links over Z_n.

Two independent constructions:

* ``build_quiver_bruteforce`` enumerates colorings and endomorphisms and counts
  every edge psi -> f o psi.
* ``build_quiver_closed_form`` writes the quiver down from N and n alone as a
  family of complete orbit graphs joined by weighted cross edges.

Both reduce to a ``QuiverCertificate`` (orbit sizes plus uniform multiplicities
between orbit pairs), and equal certificates mean isomorphic quivers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from .arith import MultiIndex, factorize, gcd, p_adic_valuation
from .dihedral import AffineMap, all_endomorphisms
from .homset import (
    Coloring,
    OrbitDecomposition,
    _as_word,
    enumerate_colorings_bruteforce,
    orbit_index_set,
    orbit_sizes_closed_form,
    precedes,
)
from .tangle import determinant


class NonUniformMultiplicityError(ValueError):
    """Edge multiplicities differ inside one ordered orbit pair."""


@dataclass(frozen=True, eq=False)
class Quiver:
    n: int
    determinant: int
    vertices: Tuple[Coloring, ...]
    multiplicity: np.ndarray  # [source, target] -> number of parallel edges
    generators: int  # |S|

    def __post_init__(self):
        self.multiplicity.setflags(write=False)

    @property
    def total_edges(self) -> int:
        return int(self.multiplicity.sum())

    def index(self) -> Dict[Tuple[int, int], int]:
        return {v.pair: k for k, v in enumerate(self.vertices)}

    def edges(self) -> list[Tuple[int, int, int]]:
        """Nonzero (source, target, multiplicity), sorted."""
        src, dst = np.nonzero(self.multiplicity)
        return [(int(s), int(t), int(self.multiplicity[s, t])) for s, t in zip(src, dst)]


def build_quiver_bruteforce(word, n: int, maps: Optional[Iterable[AffineMap]] = None) -> Quiver:
    """Count psi -> f o psi over every coloring psi and every f in ``maps`` (default: all of End(Z_n))."""
    word = _as_word(word)
    maps = list(all_endomorphisms(n) if maps is None else maps)
    for f in maps:
        if f.n != n:
            raise ValueError(f"{f} is not a map on Z_{n}")
    vertices = tuple(sorted(enumerate_colorings_bruteforce(word, n), key=lambda c: c.pair))
    size = len(vertices)
    lookup = np.full(n * n, -1, dtype=np.int64)
    for k, v in enumerate(vertices):
        lookup[v.a * n + v.b] = k
    a = np.array([v.a for v in vertices], dtype=np.int64)[:, None]
    b = np.array([v.b for v in vertices], dtype=np.int64)[:, None]
    x = np.array([f.x for f in maps], dtype=np.int64)[None, :]
    slope = np.array([f.slope for f in maps], dtype=np.int64)[None, :]
    # rows are vertices, columns are maps; each row is independent
    targets = lookup[((slope * a + x) % n) * n + (slope * b + x) % n]
    if (targets < 0).any():
        s, m = map(int, np.argwhere(targets < 0)[0])
        raise ValueError(f"{maps[m]} sends {vertices[s]} outside the Hom-set")
    sources = np.repeat(np.arange(size, dtype=np.int64), len(maps))
    flat = np.bincount(sources * size + targets.ravel(), minlength=size * size)
    return Quiver(n, determinant(word), vertices, flat.reshape(size, size), len(maps))


def edge_labels(q: Quiver, source: Coloring, target: Coloring, maps: Optional[Iterable[AffineMap]] = None):
    """Debug helper: the maps f with f o source == target."""
    maps = all_endomorphisms(q.n) if maps is None else maps
    return [f for f in maps if (f.apply(source.a), f.apply(source.b)) == target.pair]


def count_edges_closed_form(a: int, b: int, n: int) -> int:
    """Number of endomorphisms sending [0, a] to [0, b]."""
    d = gcd(a % n, n)
    return d if (b % n) % d == 0 else 0


@dataclass(frozen=True)
class ClosedFormQuiver:
    n: int
    determinant: int
    index_set: Tuple[MultiIndex, ...]
    orbit_size: Dict[MultiIndex, int]
    internal_mult: Dict[MultiIndex, int]
    cross_mult: Dict[Tuple[MultiIndex, MultiIndex], int]

    def divisor(self, j: MultiIndex) -> int:
        return factorize(self.n).evaluate(j)

    @property
    def vertex_count(self) -> int:
        return sum(self.orbit_size.values())


def build_quiver_closed_form(big_n: int, n: int) -> ClosedFormQuiver:
    fact = factorize(n)
    sizes = orbit_sizes_closed_form(big_n, n)
    index_set = tuple(orbit_index_set(big_n, n))
    internal = {j: fact.evaluate(j) for j in index_set}
    cross = {
        (j, k): fact.evaluate(j) if precedes(j, k) and j != k else 0
        for j in index_set
        for k in index_set
    }
    return ClosedFormQuiver(n, big_n, index_set, sizes, internal, cross)


@dataclass(frozen=True)
class BlockGraph:
    """A multigraph given by blocks of mutually adjacent vertices.

    ``blocks[k] = (label, size, mult)`` is a complete graph on ``size`` vertices
    with ``mult`` edges per ordered pair (loops included); ``joins[(s, t)]`` is
    the number of edges from each vertex of block s to each vertex of block t.
    """

    blocks: Tuple[Tuple[int, int, int], ...]
    joins: Dict[Tuple[int, int], int]

    def join_from(self, block: Tuple[int, int, int], mult: int) -> "BlockGraph":
        """Add ``block`` with ``mult`` edges from each of its vertices to every existing vertex."""
        new = len(self.blocks)
        joins = dict(self.joins)
        for k in range(new):
            joins[(new, k)] = mult
            joins[(k, new)] = 0
        return BlockGraph(self.blocks + (block,), joins)


def build_prime_power_iterated(big_n: int, p: int, alpha: int) -> BlockGraph:
    """G_0 = (K_{p^a}, p^a); G_j = G_{j-1} <-nabla_{p^(a-j)} (K_{p^(a+j-1)(p-1)}, p^(a-j))."""
    beta = min(alpha, p_adic_valuation(p, big_n))
    g = BlockGraph(((p**alpha, p**alpha, p**alpha),), {})
    for j in range(1, beta + 1):
        mult = p ** (alpha - j)
        g = g.join_from((p ** (alpha - j), p ** (alpha + j - 1) * (p - 1), mult), mult)
    return g


@dataclass(frozen=True)
class OrbitSummary:
    divisor: int
    size: int
    self_loops: int
    internal: Optional[int]  # None for a one-vertex orbit


@dataclass(frozen=True)
class QuiverCertificate:
    """Orbit-level description of a quiver; cross entries cover all ordered pairs of distinct orbits."""

    orbits: Tuple[OrbitSummary, ...]
    cross: Tuple[Tuple[int, int, int], ...]  # (source divisor, target divisor, mult)

    def to_json(self) -> dict:
        return {
            "orbits": [
                {"divisor": o.divisor, "size": o.size, "self_loops": o.self_loops, "internal": o.internal}
                for o in self.orbits
            ],
            "cross": [list(c) for c in self.cross],
        }


def _uniform(values: np.ndarray, what: str) -> int:
    lo, hi = int(values.min()), int(values.max())
    if lo != hi:
        raise NonUniformMultiplicityError(f"non-uniform multiplicity for {what}: {lo} vs {hi}")
    return lo


def certificate(q: Quiver, decomp: OrbitDecomposition) -> QuiverCertificate:
    index = q.index()
    groups = []
    for orb in decomp.orbits:
        try:
            groups.append(np.array(sorted(index[c.pair] for c in orb.members), dtype=np.int64))
        except KeyError as exc:
            raise ValueError(f"orbit member {list(exc.args[0])} is not a quiver vertex") from None
    covered = sum(len(g) for g in groups)
    if covered != len(q.vertices):
        raise ValueError(f"orbits cover {covered} of {len(q.vertices)} vertices")
    mat = q.multiplicity
    summaries = []
    for orb, g in zip(decomp.orbits, groups):
        block = mat[np.ix_(g, g)]
        loops = _uniform(np.diag(block), f"self-loops in orbit {orb.divisor}")
        off = block[~np.eye(len(g), dtype=bool)]
        internal = _uniform(off, f"orbit {orb.divisor}") if off.size else None
        summaries.append(OrbitSummary(orb.divisor, len(g), loops, internal))
    cross = []
    for s, (os_, gs) in enumerate(zip(decomp.orbits, groups)):
        for t, (ot, gt) in enumerate(zip(decomp.orbits, groups)):
            if s != t:
                m = _uniform(mat[np.ix_(gs, gt)], f"orbit pair {os_.divisor}->{ot.divisor}")
                cross.append((os_.divisor, ot.divisor, m))
    return _normalized(summaries, cross)


def _normalized(summaries, cross) -> QuiverCertificate:
    return QuiverCertificate(
        tuple(sorted(summaries, key=lambda o: o.divisor)),
        tuple(sorted(cross)),
    )


def certificate_of_closed_form(cf: ClosedFormQuiver) -> QuiverCertificate:
    summaries = []
    for j in cf.index_set:
        size = cf.orbit_size[j]
        mult = cf.internal_mult[j]
        summaries.append(OrbitSummary(cf.divisor(j), size, mult, mult if size > 1 else None))
    cross = [
        (cf.divisor(j), cf.divisor(k), cf.cross_mult[(j, k)])
        for j in cf.index_set
        for k in cf.index_set
        if j != k
    ]
    return _normalized(summaries, cross)


def certificate_of_blocks(g: BlockGraph) -> QuiverCertificate:
    summaries = [OrbitSummary(label, size, mult, mult if size > 1 else None) for label, size, mult in g.blocks]
    cross = [
        (g.blocks[s][0], g.blocks[t][0], g.joins.get((s, t), 0))
        for s in range(len(g.blocks))
        for t in range(len(g.blocks))
        if s != t
    ]
    return _normalized(summaries, cross)


def quivers_isomorphic(q: Quiver, decomp: OrbitDecomposition, cf: ClosedFormQuiver) -> bool:
    if q.n != cf.n:
        return False
    return certificate(q, decomp) == certificate_of_closed_form(cf)


def vertex_orbit_labels(q: Quiver, decomp: OrbitDecomposition) -> Sequence[int]:
    """Divisor label of each vertex, in vertex order."""
    where = decomp.orbit_of()
    return [decomp.orbits[where[v.pair]].divisor for v in q.vertices]
