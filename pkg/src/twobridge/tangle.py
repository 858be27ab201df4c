"""2-bridge links as tangle words or fractions, and their strand presentations.

A tangle word ``[p1 p2 ... pN]`` (all entries positive) has the continued
fraction value ``pN + 1/(... + 1/(p2 + 1/p1))``.  Its numerator is the
determinant of the closed-up link.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

Generator = Tuple[int, int]


class LinkSpecError(ValueError):
    """Malformed word or fraction text."""


class NegativeWordError(LinkSpecError):
    pass


class FractionOrderError(LinkSpecError):
    pass


class NonCoprimeFractionError(LinkSpecError):
    pass


@dataclass(frozen=True)
class TangleWord:
    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(p) for p in self.entries)
        if not entries:
            raise LinkSpecError("a tangle word needs at least one entry")
        if any(p < 0 for p in entries):
            raise NegativeWordError(
                f"word {list(entries)} has negative entries; mirror images have the "
                "same invariants, so negate every entry and retry"
            )
        if any(p == 0 for p in entries):
            raise LinkSpecError(f"word {list(entries)} has a zero entry; entries must be positive")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.entries)) + "]"


@dataclass(frozen=True)
class TangleFraction:
    """The fraction N/M of a 2-bridge link, with gcd(N, M) = 1 and 0 < M <= N."""

    numerator: int
    denominator: int

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if num <= 0 or den <= 0:
            raise LinkSpecError(f"{num}/{den}: numerator and denominator must be positive")
        if den > num:
            raise FractionOrderError(
                f"{num}/{den}: denominator exceeds numerator; only 0 < M <= N is supported"
            )
        if math.gcd(num, den) != 1:
            raise NonCoprimeFractionError(f"{num}/{den} is not in lowest terms")

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def _as_word(word) -> TangleWord:
    return word if isinstance(word, TangleWord) else TangleWord(tuple(word))


def determinant_sequence(word: TangleWord | Sequence[int]) -> Tuple[int, ...]:
    """(Delta_0, ..., Delta_N) with Delta_0 = 1, Delta_1 = p1, Delta_j = p_j Delta_{j-1} + Delta_{j-2}."""
    word = _as_word(word)
    seq = [1, word.entries[0]]
    for p in word.entries[1:]:
        seq.append(p * seq[-1] + seq[-2])
    return tuple(seq)


def determinant(word: TangleWord | Sequence[int]) -> int:
    return determinant_sequence(word)[-1]


def word_to_fraction(word: TangleWord | Sequence[int]) -> TangleFraction:
    # the value after step j is Delta_j / Delta_{j-1}
    seq = determinant_sequence(word)
    return TangleFraction(seq[-1], seq[-2])


def fraction_to_word(f: TangleFraction) -> TangleWord:
    """Euclidean expansion of N/M, emitted in tangle order (last quotient first)."""
    num, den = f.numerator, f.denominator
    quotients = []
    while den:
        q, r = divmod(num, den)
        quotients.append(q)
        num, den = den, r
    return TangleWord(tuple(reversed(quotients)))


@dataclass(frozen=True)
class StrandPresentation:
    """Generators x_{j,i} and relations of the fundamental quandle of TB(word).

    ``twist`` holds triples (target, left, right) meaning target = left |> right.
    ``gluing`` and ``closure`` hold pairs (lhs, rhs) meaning lhs = rhs.
    """

    word: TangleWord
    generators: Tuple[Generator, ...]
    twist: Tuple[Tuple[Generator, Generator, Generator], ...]
    gluing: Tuple[Tuple[Generator, Generator], ...]
    closure: Tuple[Tuple[Generator, Generator], ...]

    @property
    def relation_count(self) -> int:
        return len(self.twist) + len(self.gluing) + len(self.closure)


def _previous_end(word: TangleWord, j: int) -> Generator:
    """x_{j, p_j + 1}, with x_{0, p_0 + 1} read as x_{1, 2}."""
    if j == 0:
        return (1, 2)
    return (j, word.entries[j - 1] + 1)


def strand_presentation(word: TangleWord | Sequence[int]) -> StrandPresentation:
    word = _as_word(word)
    p = (None,) + word.entries  # 1-based
    big_n = len(word)
    generators = tuple((j, i) for j in range(1, big_n + 1) for i in range(1, p[j] + 3))
    twist = tuple(
        ((j, i), (j, i - 2), (j, i - 1)) for j in range(1, big_n + 1) for i in range(3, p[j] + 3)
    )
    gluing = []
    for j in range(2, big_n + 1):
        gluing.append(((j, 1), _previous_end(word, j - 2)))
        gluing.append(((j, 2), (j - 1, p[j - 1] + 2)))
    closure = (
        ((big_n, p[big_n] + 1), (1, 1)),
        ((big_n, p[big_n] + 2), _previous_end(word, big_n - 1)),
    )
    return StrandPresentation(word, generators, twist, tuple(gluing), closure)


_WORD_RE = re.compile(r"^\[\s*(.*?)\s*\]$")
_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$")


def parse_word(text: str) -> TangleWord:
    m = _WORD_RE.match(text.strip())
    if not m:
        raise LinkSpecError(f"cannot parse {text!r} as a word like [2 2]")
    body = m.group(1)
    parts = [tok for tok in re.split(r"[\s,]+", body) if tok]
    try:
        entries = tuple(int(tok) for tok in parts)
    except ValueError:
        raise LinkSpecError(f"non-integer entry in word {text!r}") from None
    return TangleWord(entries)


def parse_fraction(text: str) -> TangleFraction:
    m = _FRACTION_RE.match(text)
    if not m:
        raise LinkSpecError(f"cannot parse {text!r} as a fraction like 5/2")
    return TangleFraction(int(m.group(1)), int(m.group(2)))


def parse_link(text: str) -> TangleWord:
    """Parse ``N/M`` or ``[p1 p2 ...]`` into a tangle word."""
    if "/" in text:
        return fraction_to_word(parse_fraction(text))
    return parse_word(text)


def compositions(total: int) -> Iterator[TangleWord]:
    """Every word whose entries sum to ``total``, in lexicographic order."""
    if total < 1:
        return

    def rec(remaining: int, prefix: tuple):
        if remaining == 0:
            yield TangleWord(prefix)
            return
        for first in range(1, remaining + 1):
            yield from rec(remaining - first, prefix + (first,))

    yield from rec(total, ())


def words_up_to(max_sum: int) -> Iterator[TangleWord]:
    for s in range(1, max_sum + 1):
        yield from compositions(s)
