"""Words over the alphabet {a, b, c} and the block-word languages.

A "block word" is a word of the form  a^i c u a c^j  (i, j >= 0, u arbitrary):
a run of a's, a mandatory c, anything, a mandatory a, a run of c's.  These are
exactly the words that encode an N-shaped permutation (see bijections).  The
avoiding block words additionally avoid four forbidden factors that depend on
a pattern length m >= 3.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .errors import InvalidInputError

ALPHABET = "abc"


def check_word(word: str) -> str:
    """Validate the alphabet and hand the word back."""
    if any(symbol not in ALPHABET for symbol in word):
        raise InvalidInputError(f"word must use only letters a, b, c: {word!r}")
    return word


def avoids_factor(word: str, factor: str) -> bool:
    """True when ``factor`` never occurs as a contiguous block of ``word``."""
    check_word(word)
    check_word(factor)
    if not factor:
        raise InvalidInputError("the factor must be nonempty")
    return factor not in word


def block_word_split(word: str) -> tuple[int, int] | None:
    """Return (i, j) for the a^i c u a c^j form, or None if the form fails.

    The maximal leading a-run and maximal trailing c-run are forced: the
    mandatory c terminates the former and the mandatory a the latter.
    """
    check_word(word)
    n = len(word)
    i = 0
    while i < n and word[i] == "a":
        i += 1
    if i >= n or word[i] != "c":
        return None
    j = 0
    while j < n and word[n - 1 - j] == "c":
        j += 1
    if j >= n or word[n - 1 - j] != "a":
        return None
    if i + 1 >= n - j:
        return None
    return i, j


def is_block_word(word: str) -> bool:
    """True for words of the form a^i c u a c^j."""
    return block_word_split(word) is not None


def forbidden_factors(m: int = 3) -> tuple[str, str, str, str]:
    """The four factors whose absence marks an inverse m...21 avoider.

    >>> forbidden_factors(3)
    ('bba', 'bbb', 'cba', 'cbb')
    """
    if m < 3:
        raise InvalidInputError(f"m must be >= 3, got {m}")
    b = "b" * (m - 2)
    return (b + "ba", b + "bb", "c" + b + "a", "c" + b + "b")


def is_avoiding_block_word(word: str, m: int = 3) -> bool:
    """Block-word form plus avoidance of the four order-m forbidden factors."""
    if not is_block_word(word):
        return False
    return all(factor not in word for factor in forbidden_factors(m))


def iter_words(n: int) -> Iterator[str]:
    """All 3^n words of length n in lexicographic order."""
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    return ("".join(symbols) for symbols in itertools.product(ALPHABET, repeat=n))


def iter_block_words(n: int) -> Iterator[str]:
    """All block words of length n, generated from the form directly.

    Built by looping over the two run lengths and the free middle, so this
    stream is independent of the regex machinery; it is the enumeration
    oracle for the languages recognized there.
    """
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    for i in range(n - 1):
        for j in range(n - 1 - i):
            middle = n - i - j - 2
            for u in itertools.product(ALPHABET, repeat=middle):
                yield "a" * i + "c" + "".join(u) + "a" + "c" * j
