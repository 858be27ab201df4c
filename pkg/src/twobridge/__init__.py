"""Dihedral quandle colorings and coloring quivers of 2-bridge links."""

from .arith import euler_totient, factorize, gcd, p_adic_valuation, solve_linear_congruence
from .dihedral import AffineMap, DihedralQuandle, all_automorphisms, all_endomorphisms, compose, invert
from .homset import (
    Coloring,
    OrbitDecomposition,
    act,
    coloring_count_closed_form,
    enumerate_colorings_bruteforce,
    extend_coloring,
    orbit_decomposition,
    orbit_sizes_closed_form,
)
from .quiver import (
    build_quiver_bruteforce,
    build_quiver_closed_form,
    certificate,
    certificate_of_closed_form,
    quivers_isomorphic,
)
from .tangle import TangleFraction, TangleWord, determinant_sequence, fraction_to_word, parse_link, word_to_fraction

__version__ = "0.1.0"
