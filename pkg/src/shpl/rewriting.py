"""Plactic and shifted plactic relations as rewriting rules, and class enumeration."""

from __future__ import annotations

import operator
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod
from typing import Callable, Iterator, Sequence

from .core import Word
from .errors import BudgetError
from .insertion import p_mix, p_rsk

_OPS = {"<": operator.lt, "<=": operator.le}


@dataclass(frozen=True)
class Rule:
    """``lhs == rhs`` whenever the letters satisfy the chain ``constraint``.

    Patterns use the symbols ``a``-``d``, each at most once; the constraint is
    written like ``"a<=b<c<d"``.
    """

    name: str
    lhs: str
    rhs: str
    constraint: str

    def __post_init__(self):
        if sorted(self.lhs) != sorted(self.rhs):
            raise ValueError(f"rule {self.name} is not content preserving")

    @property
    def width(self) -> int:
        return len(self.lhs)

    @cached_property
    def checks(self) -> list[tuple[str, Callable, str]]:
        tokens = re.findall(r"<=|<|[a-z]", self.constraint)
        return [(tokens[k], _OPS[tokens[k + 1]], tokens[k + 2]) for k in range(0, len(tokens) - 2, 2)]

    def holds(self, env: dict[str, int]) -> bool:
        return all(op(env[x], env[y]) for x, op, y in self.checks)

    def rewrite(self, window: Sequence[int], forward: bool = True) -> Word | None:
        src, dst = (self.lhs, self.rhs) if forward else (self.rhs, self.lhs)
        env = dict(zip(src, window))
        if not self.holds(env):
            return None
        return tuple(env[s] for s in dst)

    def instances(self, max_letter: int) -> Iterator[tuple[Word, Word]]:
        """All ``(lhs, rhs)`` word pairs with letters in ``1..max_letter``."""
        symbols = sorted(set(self.lhs))

        def rec(k, env):
            if k == len(symbols):
                if self.holds(env):
                    yield tuple(env[s] for s in self.lhs), tuple(env[s] for s in self.rhs)
                return
            for v in range(1, max_letter + 1):
                env[symbols[k]] = v
                yield from rec(k + 1, env)
            env.pop(symbols[k], None)

        yield from rec(0, {})


PLACTIC_RULES = (
    Rule("K1", "acb", "cab", "a<=b<c"),
    Rule("K2", "bca", "bac", "a<b<=c"),
)

SHIFTED_RULES = (
    Rule("S3", "abdc", "adbc", "a<=b<=c<d"),
    Rule("S4", "acdb", "acbd", "a<=b<c<=d"),
    Rule("S5", "dacb", "adcb", "a<=b<c<d"),
    Rule("S6", "badc", "bdac", "a<b<=c<d"),
    Rule("S7", "cbda", "cdba", "a<b<c<=d"),
    Rule("S8", "dbca", "bdca", "a<b<=c<d"),
    Rule("S9", "bcda", "bcad", "a<b<=c<=d"),
    Rule("S10", "cadb", "cdab", "a<=b<c<=d"),
)


def neighbors(word: Sequence[int], rules: Sequence[Rule]) -> set[Word]:
    """Words reachable by one rule application, in either direction, at any position."""
    word = tuple(word)
    out = set()
    for rule in rules:
        k = rule.width
        for pos in range(len(word) - k + 1):
            window = word[pos : pos + k]
            for forward in (True, False):
                new = rule.rewrite(window, forward)
                if new is not None and new != window:
                    out.add(word[:pos] + new + word[pos + k :])
    return out


def shifted_knuth_neighbors(word: Sequence[int]) -> set[Word]:
    return neighbors(word, SHIFTED_RULES)


def knuth_neighbors(word: Sequence[int]) -> set[Word]:
    return neighbors(word, PLACTIC_RULES)


def closure(word: Sequence[int], rules: Sequence[Rule]) -> set[Word]:
    """Breadth-first closure; finite because every rule preserves content."""
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    while queue:
        for nb in neighbors(queue.popleft(), rules):
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return seen


def equivalent_by_relations(u: Sequence[int], v: Sequence[int], rules: Sequence[Rule] = SHIFTED_RULES) -> bool:
    u, v = tuple(u), tuple(v)
    if sorted(u) != sorted(v):
        return False
    return v in closure(u, rules)


def words_of_content(vector: Sequence[int]) -> Iterator[Word]:
    """Distinct words with the given content, in lexicographic order."""
    counts = list(vector)
    n = sum(counts)
    word: list[int] = []

    def rec():
        if len(word) == n:
            yield tuple(word)
            return
        for i, c in enumerate(counts):
            if c:
                counts[i] -= 1
                word.append(i + 1)
                yield from rec()
                word.pop()
                counts[i] += 1

    yield from rec()


def count_words_of_content(vector: Sequence[int]) -> int:
    return factorial(sum(vector)) // prod(factorial(c) for c in vector)


@dataclass(frozen=True)
class WordClass:
    """A (shifted) plactic class: its insertion tableau and all member words."""

    tableau: object
    words: tuple[Word, ...]

    def __contains__(self, word) -> bool:
        return tuple(word) in self.words

    def __len__(self):
        return len(self.words)


ShiftedPlacticClass = WordClass
PlacticClass = WordClass


def _partition_by_closure(vector, rules, key, max_size) -> list[WordClass]:
    if sum(vector) > max_size:
        raise BudgetError(f"content {tuple(vector)} has {sum(vector)} letters; the bound is {max_size}")
    remaining = set(words_of_content(vector))
    blocks = []
    for w in sorted(remaining):
        if w not in remaining:
            continue
        block = closure(w, rules)
        remaining -= block
        blocks.append(WordClass(key(w), tuple(sorted(block))))
    return blocks


def enumerate_shifted_classes(vector: Sequence[int], max_size: int = 10) -> list[WordClass]:
    """Shifted plactic classes of all words with content ``vector``.

    Blocks come from closure under the shifted relations and are keyed by the
    mixed insertion tableau of their smallest word.
    """
    return _partition_by_closure(tuple(vector), SHIFTED_RULES, p_mix, max_size)


def enumerate_plactic_classes(vector: Sequence[int], max_size: int = 10) -> list[WordClass]:
    return _partition_by_closure(tuple(vector), PLACTIC_RULES, p_rsk, max_size)


def shifted_class(word: Sequence[int]) -> WordClass:
    return WordClass(p_mix(word), tuple(sorted(closure(word, SHIFTED_RULES))))


def plactic_class(word: Sequence[int]) -> WordClass:
    return WordClass(p_rsk(word), tuple(sorted(closure(word, PLACTIC_RULES))))


def projection_pi(c: WordClass) -> WordClass:
    """The plactic class containing a shifted plactic class."""
    return plactic_class(c.words[0])
