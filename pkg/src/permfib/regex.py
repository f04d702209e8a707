"""A small exact regex engine over the alphabet {a, b, c}.

Supports literals, concatenation, union, star, plus, and bounded repetition
(expanded structurally, no counter states).  Compilation goes through a
Thompson NFA and the subset construction; the resulting DFA is total over
the alphabet.  A direct recursive matcher and an exact parse counter serve
as independent cross-checks, and the two canonical decompositions used by
the bijections (greedy segmentation of core words, suffix split of full
block words) live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union as TypingUnion

from .errors import InvalidInputError, NotInLanguageError
from .words import ALPHABET, check_word


# ---------------------------------------------------------------------------
# Syntax trees


@dataclass(frozen=True)
class Lit:
    symbol: str

    def __post_init__(self) -> None:
        if self.symbol not in ALPHABET:
            raise InvalidInputError(f"literal must be one of {ALPHABET!r}")


@dataclass(frozen=True)
class Concat:
    parts: tuple["Node", ...]


@dataclass(frozen=True)
class Union:
    options: tuple["Node", ...]


@dataclass(frozen=True)
class Star:
    inner: "Node"


@dataclass(frozen=True)
class Plus:
    inner: "Node"


@dataclass(frozen=True)
class Repeat:
    """At most ``most`` copies of ``inner`` (including zero)."""

    inner: "Node"
    most: int

    def __post_init__(self) -> None:
        if self.most < 0:
            raise InvalidInputError("bounded repetition needs most >= 0")


Node = TypingUnion[Lit, Concat, Union, Star, Plus, Repeat]


def lit(symbol: str) -> Lit:
    return Lit(symbol)


def seq(*parts: Node) -> Node:
    return parts[0] if len(parts) == 1 else Concat(tuple(parts))


def alt(*options: Node) -> Node:
    return options[0] if len(options) == 1 else Union(tuple(options))


def star(inner: Node) -> Star:
    return Star(inner)


def plus(inner: Node) -> Plus:
    return Plus(inner)


def up_to(inner: Node, most: int) -> Repeat:
    return Repeat(inner, most)


def format_ast(node: Node) -> str:
    """Render in the conventional notation with explicit union signs.

    >>> format_ast(core_regex())
    'a* c (c ∪ bc ∪ a⁺b ∪ a⁺c)*'
    """
    return _format(node, top=True)


def _format(node: Node, top: bool = False) -> str:
    if isinstance(node, Lit):
        return node.symbol
    if isinstance(node, Concat):
        rendered = []
        for part in node.parts:
            text = _format(part)
            if isinstance(part, Union):
                text = "(" + text + ")"
            rendered.append(text)
        return " ".join(rendered) if top else "".join(rendered)
    if isinstance(node, Union):
        return " ∪ ".join(_format(option) for option in node.options)
    if isinstance(node, Star):
        return _format_tight(node.inner) + "*"
    if isinstance(node, Plus):
        return _format_tight(node.inner) + "⁺"
    if isinstance(node, Repeat):
        return _format_tight(node.inner) + f"^{{≤{node.most}}}"
    raise TypeError(f"not a regex node: {node!r}")


def _format_tight(node: Node) -> str:
    text = _format(node)
    if isinstance(node, (Concat, Union)):
        return "(" + text + ")"
    return text


# ---------------------------------------------------------------------------
# The expressions this package is about


def _segment_alternatives() -> Node:
    return alt(
        lit("c"),
        seq(lit("b"), lit("c")),
        seq(plus(lit("a")), lit("b")),
        seq(plus(lit("a")), lit("c")),
    )


def core_regex() -> Node:
    """a* c (c ∪ bc ∪ a⁺b ∪ a⁺c)* — the segmentable core words."""
    return seq(star(lit("a")), lit("c"), star(_segment_alternatives()))


def block_word_regex(m: int = 3) -> Node:
    """The recognizer for avoiding block words of pattern length m.

    For m = 3 this is a* c (c ∪ bc ∪ a⁺b ∪ a⁺c)* a⁺ c*; larger m allows up
    to m-3 extra b's in front of each segment and of the closing a-run.
    """
    if m < 3:
        raise InvalidInputError(f"m must be >= 3, got {m}")
    segment = _segment_alternatives()
    if m == 3:
        middle: Node = star(segment)
        closing: tuple[Node, ...] = ()
    else:
        padding = up_to(lit("b"), m - 3)
        middle = star(seq(padding, segment))
        closing = (up_to(lit("b"), m - 3),)
    return seq(star(lit("a")), lit("c"), middle, *closing, plus(lit("a")), star(lit("c")))


# ---------------------------------------------------------------------------
# Reference matcher (backtracking over end positions) and parse counting


def match_ends(node: Node, word: str, start: int, _memo=None) -> frozenset[int]:
    """All positions where a match of ``node`` beginning at ``start`` may end."""
    if _memo is None:
        _memo = {}
    key = (id(node), start)
    if key in _memo:
        return _memo[key]
    ends: frozenset[int]
    if isinstance(node, Lit):
        ok = start < len(word) and word[start] == node.symbol
        ends = frozenset((start + 1,)) if ok else frozenset()
    elif isinstance(node, Concat):
        current = {start}
        for part in node.parts:
            current = {e for s in current for e in match_ends(part, word, s, _memo)}
        ends = frozenset(current)
    elif isinstance(node, Union):
        ends = frozenset(
            e for option in node.options for e in match_ends(option, word, start, _memo)
        )
    elif isinstance(node, (Star, Plus)):
        # positions reachable by one or more inner matches, then close up
        frontier = set(match_ends(node.inner, word, start, _memo))
        many = set(frontier)
        while frontier:
            frontier = {
                e
                for s in frontier
                for e in match_ends(node.inner, word, s, _memo)
                if e not in many
            }
            many |= frontier
        if isinstance(node, Star):
            many.add(start)
        ends = frozenset(many)
    elif isinstance(node, Repeat):
        current = {start}
        reached = {start}
        for _ in range(node.most):
            current = {e for s in current for e in match_ends(node.inner, word, s, _memo)}
            reached |= current
        ends = frozenset(reached)
    else:
        raise TypeError(f"not a regex node: {node!r}")
    _memo[key] = ends
    return ends


def ast_matches(node: Node, word: str) -> bool:
    """Backtracking reference matcher, independent of the DFA pipeline."""
    check_word(word)
    return len(word) in match_ends(node, word, 0)


def count_parses(node: Node, word: str) -> int:
    """Number of distinct derivations of ``word``; 1 means unambiguous.

    Star and plus require a non-nullable inner expression so that the count
    is finite; every expression in this package satisfies that.
    """
    check_word(word)
    memo: dict[tuple[int, int], dict[int, int]] = {}
    ways = _parse_ways(node, word, 0, memo)
    return ways.get(len(word), 0)


def _parse_ways(node: Node, word: str, start: int, memo) -> dict[int, int]:
    key = (id(node), start)
    if key in memo:
        return memo[key]
    out: dict[int, int] = {}
    if isinstance(node, Lit):
        if start < len(word) and word[start] == node.symbol:
            out[start + 1] = 1
    elif isinstance(node, Concat):
        current = {start: 1}
        for part in node.parts:
            step: dict[int, int] = {}
            for s, ways in current.items():
                for e, inner_ways in _parse_ways(part, word, s, memo).items():
                    step[e] = step.get(e, 0) + ways * inner_ways
            current = step
        out = current
    elif isinstance(node, Union):
        for option in node.options:
            for e, ways in _parse_ways(option, word, start, memo).items():
                out[e] = out.get(e, 0) + ways
    elif isinstance(node, (Star, Plus)):
        if _parse_ways(node.inner, word, start, memo).get(start):
            raise InvalidInputError("parse counting requires a non-nullable star/plus body")
        out = {start: 1} if isinstance(node, Star) else {}
        frontier = {start: 1}
        while frontier:
            step: dict[int, int] = {}
            for s, ways in frontier.items():
                for e, inner_ways in _parse_ways(node.inner, word, s, memo).items():
                    if e > s:
                        step[e] = step.get(e, 0) + ways * inner_ways
            for e, ways in step.items():
                out[e] = out.get(e, 0) + ways
            frontier = step
    elif isinstance(node, Repeat):
        current = {start: 1}
        out = {start: 1}
        for _ in range(node.most):
            step = {}
            for s, ways in current.items():
                for e, inner_ways in _parse_ways(node.inner, word, s, memo).items():
                    step[e] = step.get(e, 0) + ways * inner_ways
            for e, ways in step.items():
                out[e] = out.get(e, 0) + ways
            current = step
    else:
        raise TypeError(f"not a regex node: {node!r}")
    memo[key] = out
    return out


# ---------------------------------------------------------------------------
# Thompson NFA and subset construction


class _NfaBuilder:
    def __init__(self) -> None:
        self.epsilon: list[list[int]] = []
        self.symbol: list[dict[str, list[int]]] = []

    def new_state(self) -> int:
        self.epsilon.append([])
        self.symbol.append({})
        return len(self.epsilon) - 1

    def add_epsilon(self, src: int, dst: int) -> None:
        self.epsilon[src].append(dst)

    def add_symbol(self, src: int, symbol: str, dst: int) -> None:
        self.symbol[src].setdefault(symbol, []).append(dst)

    def build(self, node: Node) -> tuple[int, int]:
        if isinstance(node, Lit):
            s, t = self.new_state(), self.new_state()
            self.add_symbol(s, node.symbol, t)
            return s, t
        if isinstance(node, Concat):
            s, t = self.new_state(), self.new_state()
            current = s
            for part in node.parts:
                ps, pt = self.build(part)
                self.add_epsilon(current, ps)
                current = pt
            self.add_epsilon(current, t)
            return s, t
        if isinstance(node, Union):
            s, t = self.new_state(), self.new_state()
            for option in node.options:
                os_, ot = self.build(option)
                self.add_epsilon(s, os_)
                self.add_epsilon(ot, t)
            return s, t
        if isinstance(node, Star):
            s, t = self.new_state(), self.new_state()
            is_, it = self.build(node.inner)
            self.add_epsilon(s, is_)
            self.add_epsilon(s, t)
            self.add_epsilon(it, is_)
            self.add_epsilon(it, t)
            return s, t
        if isinstance(node, Plus):
            return self.build(seq(node.inner, star(node.inner)))
        if isinstance(node, Repeat):
            # chain of optional copies: stop after any prefix of them
            s, t = self.new_state(), self.new_state()
            self.add_epsilon(s, t)
            current = s
            for _ in range(node.most):
                is_, it = self.build(node.inner)
                self.add_epsilon(current, is_)
                self.add_epsilon(it, t)
                current = it
            return s, t
        raise TypeError(f"not a regex node: {node!r}")


@dataclass(frozen=True)
class Dfa:
    """Total deterministic automaton over {a, b, c}."""

    table: tuple[tuple[int, ...], ...]
    start: int
    accepting: frozenset[int]

    @property
    def states(self) -> int:
        return len(self.table)

    def step(self, state: int, symbol: str) -> int:
        return self.table[state][ALPHABET.index(symbol)]

    def accepts(self, word: str) -> bool:
        check_word(word)
        state = self.start
        table = self.table
        for symbol in word:
            state = table[state][0 if symbol == "a" else 1 if symbol == "b" else 2]
        return state in self.accepting

    def count_words(self, n: int) -> int:
        """Number of accepted words of length exactly n, by path counting."""
        if n < 0:
            raise InvalidInputError("n must be nonnegative")
        counts = [0] * self.states
        counts[self.start] = 1
        for _ in range(n):
            nxt = [0] * self.states
            for state, ways in enumerate(counts):
                if ways:
                    for target in self.table[state]:
                        nxt[target] += ways
            counts = nxt
        return sum(counts[state] for state in self.accepting)

    def language(self, n: int) -> Iterator[str]:
        """All accepted words of length n, lexicographically."""
        if n < 0:
            raise InvalidInputError("n must be nonnegative")
        viable = self._viable_table(n)
        word: list[str] = []

        def walk(state: int, remaining: int) -> Iterator[str]:
            if remaining == 0:
                if state in self.accepting:
                    yield "".join(word)
                return
            for index, symbol in enumerate(ALPHABET):
                target = self.table[state][index]
                if viable[remaining - 1][target]:
                    word.append(symbol)
                    yield from walk(target, remaining - 1)
                    word.pop()

        yield from walk(self.start, n)

    def _viable_table(self, n: int) -> list[list[bool]]:
        # viable[r][s]: some length-r word leads from s to an accepting state
        viable = [[s in self.accepting for s in range(self.states)]]
        for _ in range(n):
            previous = viable[-1]
            viable.append(
                [any(previous[t] for t in self.table[s]) for s in range(self.states)]
            )
        return viable


def compile_ast(node: Node) -> Dfa:
    """Compile via Thompson NFA and the subset construction; total DFA."""
    builder = _NfaBuilder()
    start, accept = builder.build(node)

    def closure(states: frozenset[int]) -> frozenset[int]:
        stack = list(states)
        seen = set(states)
        while stack:
            s = stack.pop()
            for t in builder.epsilon[s]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)

    initial = closure(frozenset((start,)))
    index: dict[frozenset[int], int] = {initial: 0}
    order = [initial]
    table: list[tuple[int, ...]] = []
    position = 0
    while position < len(order):
        subset = order[position]
        row = []
        for symbol in ALPHABET:
            moved = frozenset(
                t for s in subset for t in builder.symbol[s].get(symbol, ())
            )
            target = closure(moved)
            if target not in index:
                index[target] = len(order)
                order.append(target)
            row.append(index[target])
        table.append(tuple(row))
        position += 1
    accepting = frozenset(i for subset, i in index.items() if accept in subset)
    return Dfa(table=tuple(table), start=0, accepting=accepting)


@lru_cache(maxsize=None)
def core_dfa() -> Dfa:
    return compile_ast(core_regex())


@lru_cache(maxsize=None)
def block_word_dfa(m: int = 3) -> Dfa:
    return compile_ast(block_word_regex(m))


# ---------------------------------------------------------------------------
# Canonical decompositions


def core_segments(word: str) -> tuple[str, ...]:
    """The unique segmentation of a core word into c | bc | a..ab | a..ac.

    The first segment absorbs the leading a-run and its c.  Greedy scanning
    is forced: a-runs cannot straddle segment boundaries because no segment
    ends with an a.

    >>> core_segments("aacbcccaaabbcac")
    ('aac', 'bc', 'c', 'c', 'aaab', 'bc', 'ac')
    """
    check_word(word)
    if not core_dfa().accepts(word):
        raise NotInLanguageError(f"not a core word: {word!r}")
    segments = []
    position = 0
    n = len(word)
    while position < n:
        start = position
        if word[position] == "c":
            position += 1
        elif word[position] == "b":
            position += 2  # membership guarantees the following c
        else:
            while word[position] == "a":
                position += 1
            position += 1  # the terminating b or c
        segments.append(word[start:position])
    return tuple(segments)


def split_block_word(word: str) -> tuple[int, int, str]:
    """Split a full block word as core + a-run + c-run, returning (j, k, core).

    j counts the trailing c's, k is the core length, and the a-run length is
    recovered as len(word) - j - k.  The split is unique because core words
    never end with an a.

    >>> split_block_word("aacbcccaaabbcacaaccc")
    (3, 15, 'aacbcccaaabbcac')
    """
    check_word(word)
    if not block_word_dfa(3).accepts(word):
        raise NotInLanguageError(f"not an avoiding block word: {word!r}")
    n = len(word)
    j = 0
    while word[n - 1 - j] == "c":
        j += 1
    end = n - j
    while word[end - 1] == "a":
        end -= 1
    core = word[:end]
    return j, end, core


def reassemble_block_word(j: int, k: int, core: str, n: int) -> str:
    """Inverse of :func:`split_block_word` for a target total length n."""
    if len(core) != k:
        raise InvalidInputError(f"core has length {len(core)}, expected k={k}")
    runs = n - j - k
    if runs < 1:
        raise InvalidInputError(f"need at least one a between core and c-run (n={n}, j={j}, k={k})")
    return core + "a" * runs + "c" * j
