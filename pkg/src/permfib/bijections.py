"""Constructive bijections between permutations, words, and tilings.

An N-shaped permutation is one with exactly one left peak: its plot rises,
falls, and rises again (either outer part may be empty, the identity is
excluded).  Such a permutation splits canonically as alpha | beta | gamma
with alpha and gamma increasing and beta decreasing, beta shortest possible.
Recording, for each value 1..n, which of the three parts contains it gives a
word over {a, b, c}; that encoding, its inverse, and the composite map down
to tilings all live here, together with the unique zero-ipk permutation of a
given descent composition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .compositions import Composition
from .errors import InvalidInputError, NotInDomainError
from .permutations import (
    Permutation,
    contains_descending_run,
    inverse_letters,
    left_peak_count,
    left_peaks,
    right_valleys,
)
from .regex import reassemble_block_word, split_block_word
from .tilings import Tiling, tiling_to_word, word_to_tiling
from .words import block_word_split, forbidden_factors, is_avoiding_block_word


@dataclass(frozen=True)
class CanonicalDecomposition:
    """The rise/fall/rise split of an N-shaped permutation."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    gamma: tuple[int, ...]


@dataclass(frozen=True)
class TilingTriple:
    """Image of an N-shaped inverse-avoider: c-run length, core width, tiling."""

    j: int
    k: int
    tiling: Tiling


def is_n_shaped(p: Permutation) -> bool:
    """True when the permutation has exactly one left peak."""
    return left_peak_count(p.letters) == 1


def zero_ipk_permutation(composition: Composition) -> Permutation:
    """The unique permutation with the given descent composition and ipk 0.

    With k parts, value 1 opens the last increasing run, value 2 the one
    before it, and so on; values k+1..n then fill the remaining positions in
    ascending order.

    >>> str(zero_ipk_permutation(Composition((3, 2, 3, 1))))
    '4 5 6 3 7 2 8 9 1'
    """
    parts = composition.parts
    n = composition.n
    if n < 1:
        raise InvalidInputError("the composition must have at least one part")
    k = len(parts)
    letters = [0] * n
    start = 0
    for index, part in enumerate(parts):
        letters[start] = k - index
        start += part
    value = k + 1
    for position in range(n):
        if letters[position] == 0:
            letters[position] = value
            value += 1
    return Permutation(tuple(letters))


def canonical_decomposition(p: Permutation) -> CanonicalDecomposition:
    """Split an N-shaped permutation at its left peak and right valley.

    The letter at the left peak goes to alpha and the letter at the right
    valley to gamma, which makes beta as short as possible.
    """
    letters = p.letters
    if left_peak_count(letters) != 1:
        raise NotInDomainError(
            f"lpk != 1: not an N-shaped permutation: {p}"
        )
    peak = left_peaks(letters)[0]
    valley_positions = right_valleys(letters)
    assert len(valley_positions) == 1, "one left peak forces one right valley"
    valley = valley_positions[0]
    assert peak < valley
    return CanonicalDecomposition(
        alpha=letters[:peak],
        beta=letters[peak : valley - 1],
        gamma=letters[valley - 1 :],
    )


def block_word(p: Permutation) -> str:
    """Encode an N-shaped permutation as a word: letter i of the word names
    the part (a: alpha, b: beta, c: gamma) holding the value i.

    >>> block_word(Permutation.from_text("1 2 5 10 12 8 6 4 3 7 9 11"))
    'aacbabcbcaca'
    """
    split = canonical_decomposition(p)
    symbols = [""] * len(p)
    for part, symbol in ((split.alpha, "a"), (split.beta, "b"), (split.gamma, "c")):
        for value in part:
            symbols[value - 1] = symbol
    return "".join(symbols)


def word_to_permutation(word: str) -> Permutation:
    """Decode a block word back to the unique N-shaped permutation.

    Values whose letter is a are sorted increasingly, then the b values
    decreasingly, then the c values increasingly.
    """
    if block_word_split(word) is None:
        raise NotInDomainError(
            f"not of the form a^i c u a c^j, so not an encoding: {word!r}"
        )
    alpha = [i for i, symbol in enumerate(word, start=1) if symbol == "a"]
    beta = [i for i, symbol in enumerate(word, start=1) if symbol == "b"]
    gamma = [i for i, symbol in enumerate(word, start=1) if symbol == "c"]
    letters = tuple(alpha) + tuple(reversed(beta)) + tuple(gamma)
    return Permutation(letters)


def is_tiling_mappable(p: Permutation, m: int = 3) -> bool:
    """N-shaped with an inverse avoiding the descending consecutive pattern."""
    if not is_n_shaped(p):
        return False
    return not contains_descending_run(inverse_letters(p.letters), m)


def permutation_to_tiling_triple(p: Permutation) -> TilingTriple:
    """Compose encoding, suffix split, and tiling construction.

    >>> triple = permutation_to_tiling_triple(Permutation.from_text("21"))
    >>> (triple.j, triple.k, triple.tiling.serialize())
    (0, 1, '1\\n1')
    """
    if not is_n_shaped(p):
        raise NotInDomainError(f"lpk != 1: not an N-shaped permutation: {p}")
    word = block_word(p)
    if not is_avoiding_block_word(word, 3):
        raise NotInDomainError(
            f"inverse contains a descending 3-run: encoding {word!r} has a factor in "
            f"{forbidden_factors(3)}"
        )
    j, k, core = split_block_word(word)
    return TilingTriple(j=j, k=k, tiling=word_to_tiling(core))


def tiling_triple_to_permutation(triple: TilingTriple, n: int) -> Permutation:
    """Invert :func:`permutation_to_tiling_triple` for ambient length n."""
    if not (1 <= triple.k <= n - 1 and 0 <= triple.j <= n - triple.k - 1):
        raise InvalidInputError(
            f"triple (j={triple.j}, k={triple.k}) does not fit length {n}"
        )
    core = tiling_to_word(triple.tiling)
    word = reassemble_block_word(triple.j, triple.k, core, n)
    return word_to_permutation(word)
