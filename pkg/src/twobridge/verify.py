"""Batch cross-check of brute force against the closed forms over ranges of words and moduli."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List

from .dihedral import EXHAUSTIVE_LIMIT, verify_affine_completeness
from .homset import (
    coloring_count_closed_form,
    closed_form_seeds,
    divisor_of,
    enumerate_colorings_bruteforce,
    orbit_decomposition,
    orbit_sizes_closed_form,
)
from .quiver import (
    build_quiver_bruteforce,
    build_quiver_closed_form,
    certificate,
    certificate_of_closed_form,
    count_edges_closed_form,
    NonUniformMultiplicityError,
)
from .tangle import determinant, words_up_to

CHECKS = ("count", "edges", "orbits", "certificate", "affine")


@dataclass
class ModulusResult:
    n: int
    checked: Dict[str, int] = field(default_factory=lambda: dict.fromkeys(CHECKS, 0))
    failures: List[str] = field(default_factory=list)

    def failed(self, check: str) -> bool:
        return any(msg.startswith(check + ":") for msg in self.failures)


def check_modulus(n: int, max_sum: int) -> ModulusResult:
    res = ModulusResult(n)

    def fail(check, msg):
        res.failures.append(f"{check}: {msg}")

    for word in words_up_to(max_sum):
        delta = determinant(word)
        colorings = enumerate_colorings_bruteforce(word, n)
        pairs = [c.pair for c in colorings]

        res.checked["count"] += 1
        if len(pairs) != coloring_count_closed_form(delta, n) or pairs != closed_form_seeds(word, n):
            fail("count", f"{word} over Z_{n}: brute force {len(pairs)}, closed form {coloring_count_closed_form(delta, n)}")

        q = build_quiver_bruteforce(word, n)
        index = q.index()
        res.checked["edges"] += 1
        for a in range(n):
            for b in range(n):
                if (0, a) in index and (0, b) in index:
                    got = int(q.multiplicity[index[(0, a)], index[(0, b)]])
                    if got != count_edges_closed_form(a, b, n):
                        fail("edges", f"{word} over Z_{n}: [0,{a}]->[0,{b}] has {got} edges")

        decomp = orbit_decomposition(colorings, n)
        expected = orbit_sizes_closed_form(delta, n)
        res.checked["orbits"] += 1
        got_sizes = Counter((o.divisor, o.size) for o in decomp.orbits)
        want_sizes = Counter((divisor_of(j, n), s) for j, s in expected.items())
        if got_sizes != want_sizes:
            fail("orbits", f"{word} over Z_{n}: {sorted(got_sizes)} vs {sorted(want_sizes)}")

        res.checked["certificate"] += 1
        try:
            same = certificate(q, decomp) == certificate_of_closed_form(build_quiver_closed_form(delta, n))
        except NonUniformMultiplicityError as exc:
            fail("certificate", f"{word} over Z_{n}: {exc}")
        else:
            if not same:
                fail("certificate", f"{word} over Z_{n}: certificates differ")

    if n <= EXHAUSTIVE_LIMIT:
        res.checked["affine"] += 1
        if not verify_affine_completeness(n):
            fail("affine", f"Z_{n} has non-affine endomorphisms")
    return res


def run_verification(max_sum: int, max_n: int, workers: int = 1) -> List[ModulusResult]:
    if max_sum < 1 or max_n < 1:
        raise ValueError("max_sum and max_n must both be at least 1")
    moduli = range(1, max_n + 1)
    if workers <= 1:
        return [check_modulus(n, max_sum) for n in moduli]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(check_modulus, moduli, [max_sum] * max_n))
