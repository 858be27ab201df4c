from collections import Counter
from math import gcd

import pytest

from twobridge.dihedral import AffineMap, all_automorphisms, all_endomorphisms
from twobridge.homset import (
    Coloring,
    ColoringError,
    accepted_seeds_bruteforce,
    act,
    closed_form_seeds,
    coloring_count_closed_form,
    divisor_of,
    enumerate_colorings_bruteforce,
    extend_coloring,
    multi_index_of,
    orbit_decomposition,
    orbit_index_set,
    orbit_sizes_closed_form,
    trivial_colorings,
)
from twobridge.tangle import TangleWord, determinant, determinant_sequence, strand_presentation, words_up_to

T4_ORBITS = [
    {(0, 0), (1, 1), (2, 2), (3, 3)},
    {(0, 1), (1, 2), (2, 3), (3, 0), (0, 3), (1, 0), (2, 1), (3, 2)},
    {(0, 2), (1, 3), (2, 0), (3, 1)},
]


def satisfies_presentation(word, coloring):
    pres = strand_presentation(word)
    s, n = coloring.strands, coloring.n
    return (
        all(s[t] == (2 * s[r] - s[l]) % n for t, l, r in pres.twist)
        and all(s[x] == s[y] for x, y in pres.gluing + pres.closure)
    )


def test_extend_trivial():
    word = TangleWord((3, 1, 2))
    psi = extend_coloring(word, 7, 4, 4)
    assert set(psi.strands.values()) == {4}


def test_extend_trefoil_strands():
    psi = extend_coloring(TangleWord((3,)), 3, 0, 1)
    assert [psi.strands[(1, i)] for i in range(1, 6)] == [0, 1, 2, 0, 1]


def test_extend_matches_claim_for_5_2():
    word = TangleWord((2, 2))
    psi = extend_coloring(word, 5, 0, 1)
    # [m] = m b - (m - 1) a with a = 0, b = 1 is m itself; [5] = 0 mod 5
    assert psi.strands[(2, 3)] == 0 == psi.a
    assert satisfies_presentation(word, psi)


def test_extend_rejects_bad_seed():
    with pytest.raises(ColoringError):
        extend_coloring(TangleWord((2, 2)), 4, 0, 1)


def test_claim_holds_in_every_extension():
    for word in words_up_to(7):
        seq = determinant_sequence(word)
        for n in range(1, 11):
            for psi in enumerate_colorings_bruteforce(word, n):
                for j, p in enumerate(word.entries, start=1):
                    a, b = psi.a, psi.b
                    assert psi.strands[(j, p + 1)] == (seq[j] * b - (seq[j] - 1) * a) % n
                    m = seq[j] + seq[j - 1]
                    assert psi.strands[(j, p + 2)] == (m * b - (m - 1) * a) % n


@pytest.mark.parametrize("word,n,count", [((4,), 4, 16), ((3,), 3, 9), ((2, 2), 4, 4)])
def test_bruteforce_examples(word, n, count):
    colorings = enumerate_colorings_bruteforce(TangleWord(word), n)
    assert len(colorings) == count
    if word == (2, 2):
        assert all(c.is_trivial() for c in colorings)


@pytest.mark.parametrize("delta,n,count", [(4, 4, 16), (36, 12, 144), (5, 4, 4)])
def test_closed_form_count(delta, n, count):
    assert coloring_count_closed_form(delta, n) == count


def test_closed_form_count_36_matches_bruteforce():
    assert len(enumerate_colorings_bruteforce(TangleWord((36,)), 12)) == 144


def test_seed_characterization():
    for word in words_up_to(8):
        for n in range(1, 17):
            assert accepted_seeds_bruteforce(word, n) == closed_form_seeds(word, n)


def test_bruteforce_colorings_satisfy_relations_and_match_extension():
    for word in words_up_to(6):
        for n in range(1, 10):
            for psi in enumerate_colorings_bruteforce(word, n):
                assert satisfies_presentation(word, psi)
                ext = extend_coloring(word, n, psi.a, psi.b)
                assert dict(ext.strands) == dict(psi.strands)


def test_bruteforce_order_is_lexicographic():
    pairs = [c.pair for c in enumerate_colorings_bruteforce(TangleWord((6,)), 6)]
    assert pairs == sorted(pairs)


def test_trivial_colorings():
    word = TangleWord((2, 3))
    assert [c.pair for c in trivial_colorings(word, 3)] == [(0, 0), (1, 1), (2, 2)]
    assert len(trivial_colorings(word, 1)) == 1
    for n in (4, 9):
        triv = trivial_colorings(word, n)
        assert all(c.a == c.b for c in triv)
        assert set(triv) <= set(enumerate_colorings_bruteforce(word, n))


def test_coloring_equality_ignores_strands():
    assert Coloring(4, 1, 2) == Coloring(4, 1, 2, {(1, 1): 1})
    assert len({Coloring(4, 1, 2), Coloring(4, 1, 2, {(1, 1): 1})}) == 1


def test_act_examples():
    word = TangleWord((4,))
    psi = extend_coloring(word, 4, 1, 2)
    assert act(AffineMap.identity(4), psi) == psi
    const = act(AffineMap.constant(4, 3), psi)
    assert const.pair == (3, 3) and set(const.strands.values()) == {3}
    assert act(AffineMap(4, 0, 3), extend_coloring(word, 4, 0, 2)).pair == (0, 2)
    with pytest.raises(ValueError):
        act(AffineMap.identity(5), psi)


def test_action_stays_in_homset_and_acts_pointwise():
    for word in [TangleWord(w) for w in [(4,), (2, 2), (3, 3), (6,), (1, 2, 3)]]:
        for n in (4, 6, 9):
            homset = set(enumerate_colorings_bruteforce(word, n))
            for psi in homset:
                for f in all_endomorphisms(n):
                    img = act(f, psi)
                    assert img in homset
                    assert dict(img.strands) == dict(extend_coloring(word, n, *img.pair).strands)


def brute_orbits(homset, n):
    """Union-find partition under all automorphisms, independent of orbit_decomposition."""
    parent = {c.pair: c.pair for c in homset}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in homset:
        for f in all_automorphisms(n):
            parent[find(c.pair)] = find((f(c.a), f(c.b)))
    groups = {}
    for p in parent:
        groups.setdefault(find(p), set()).add(p)
    return list(groups.values())


def test_orbits_of_torus_link_t42_over_z4():
    decomp = orbit_decomposition(enumerate_colorings_bruteforce(TangleWord((4,)), 4), 4)
    got = [set(o.pairs()) for o in decomp.orbits]
    assert sorted(map(sorted, got)) == sorted(map(sorted, T4_ORBITS))
    assert [(o.divisor, o.size, o.representative.pair) for o in decomp.orbits] == [
        (1, 8, (0, 1)),
        (2, 4, (0, 2)),
        (4, 4, (0, 0)),
    ]


def test_orbits_of_t36_2_over_z12():
    decomp = orbit_decomposition(enumerate_colorings_bruteforce(TangleWord((36,)), 12), 12)
    assert sorted(decomp.sizes, reverse=True) == [48, 24, 24, 24, 12, 12]
    assert [o.divisor for o in decomp.orbits] == [1, 2, 3, 4, 6, 12]


def test_orbit_decomposition_matches_union_find():
    for word in words_up_to(5):
        for n in range(1, 13):
            homset = enumerate_colorings_bruteforce(word, n)
            decomp = orbit_decomposition(homset, n)
            got = sorted(sorted(o.pairs()) for o in decomp.orbits)
            assert got == sorted(sorted(g) for g in brute_orbits(homset, n))
            trivial = [o for o in decomp.orbits if o.divisor == n]
            assert len(trivial) == 1 and trivial[0].size == n
            for o in decomp.orbits:
                assert {gcd((b - a) % n, n) for a, b in o.pairs()} == {o.divisor}
                assert o.representative.a == 0
                assert o.representative.b == min(b for a, b in o.pairs() if a == 0)


@pytest.mark.parametrize(
    "big_n,n,expected",
    [
        (4, 4, {(0,): 8, (1,): 4, (2,): 4}),
        (36, 12, {(0, 0): 48, (1, 0): 24, (2, 0): 24, (0, 1): 24, (1, 1): 12, (2, 1): 12}),
        (5, 4, {(2,): 4}),
        (1, 1, {(): 1}),
    ],
)
def test_orbit_sizes_closed_form(big_n, n, expected):
    assert orbit_sizes_closed_form(big_n, n) == expected
    assert sum(expected.values()) == coloring_count_closed_form(big_n, n)


def test_orbit_sizes_sum_to_count():
    for big_n in range(1, 80):
        for n in range(1, 65):
            assert sum(orbit_sizes_closed_form(big_n, n).values()) == n * gcd(big_n, n)


def test_orbit_sizes_match_bruteforce():
    for word in words_up_to(7):
        delta = determinant(word)
        for n in range(1, 17):
            decomp = orbit_decomposition(enumerate_colorings_bruteforce(word, n), n)
            want = Counter((divisor_of(j, n), s) for j, s in orbit_sizes_closed_form(delta, n).items())
            assert Counter((o.divisor, o.size) for o in decomp.orbits) == want


def test_divisor_multi_index_round_trip():
    for n in range(1, 100):
        for j in orbit_index_set(n, n):
            assert multi_index_of(divisor_of(j, n), n) == j
    with pytest.raises(ValueError):
        multi_index_of(5, 12)
