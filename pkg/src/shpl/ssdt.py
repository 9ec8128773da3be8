"""Hook words, semistandard decomposition tableaux and SK insertion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .core import (
    Partition,
    ShiftedTableau,
    StandardShiftedTableau,
    Word,
    content,
    format_word,
    parse_word,
    _split_rows,
)
from .errors import HookError, InternalError, MaximalityError, ShapeError, SplitError
from .insertion import mread, p_mix


class HookWordSplit(NamedTuple):
    decreasing: Word
    increasing: Word


def _decreasing_prefix_end(w: Sequence[int]) -> int:
    k = 1
    while k < len(w) and w[k - 1] > w[k]:
        k += 1
    return k


def is_hook_word(w: Sequence[int]) -> bool:
    """A strictly decreasing run followed by a weakly increasing run."""
    if len(w) <= 2:
        return True
    k = _decreasing_prefix_end(w)
    return all(w[t] <= w[t + 1] for t in range(k - 1, len(w) - 1))


def hook_split(w: Sequence[int]) -> HookWordSplit:
    """Split a hook word after its maximal strictly decreasing prefix."""
    w = tuple(w)
    if not w:
        raise SplitError("the empty word has no decreasing part")
    if not is_hook_word(w):
        raise SplitError(f"{format_word(w)} is not a hook word")
    k = _decreasing_prefix_end(w)
    return HookWordSplit(w[:k], w[k:])


def longest_hook_subword_length(w: Sequence[int]) -> int:
    """Longest hook subsequence, pivoting on the last letter of the decreasing run."""
    n = len(w)
    if n == 0:
        return 0
    dec = [1] * n  # longest strictly decreasing subsequence ending at t
    for t in range(n):
        for s in range(t):
            if w[s] > w[t] and dec[s] + 1 > dec[t]:
                dec[t] = dec[s] + 1
    inc = [1] * n  # longest weakly increasing subsequence starting at t
    for t in range(n - 1, -1, -1):
        for s in range(t + 1, n):
            if w[t] <= w[s] and inc[s] + 1 > inc[t]:
                inc[t] = inc[s] + 1
    return max(d + i - 1 for d, i in zip(dec, inc))


# ---------------------------------------------------------------------------
# decomposition tableaux

def _ssdt_problem(rows) -> Exception | None:
    shape = tuple(len(r) for r in rows)
    if any(p == 0 for p in shape) or any(a <= b for a, b in zip(shape, shape[1:])):
        return ShapeError(f"row lengths {shape} are not strictly decreasing")
    for i, row in enumerate(rows, 1):
        if any(a <= 0 for a in row):
            return HookError("letters must be positive", i)
        if not is_hook_word(row):
            return HookError(f"{format_word(row)} is not a hook word", i)
    full = pairwise = None
    for i in range(len(rows) - 1, 0, -1):
        tail = tuple(a for row in reversed(rows[i - 1 :]) for a in row)
        if full is None and longest_hook_subword_length(tail) != len(rows[i - 1]):
            full = i
        if pairwise is None and longest_hook_subword_length(rows[i] + rows[i - 1]) != len(rows[i - 1]):
            pairwise = i
    if (full is None) != (pairwise is None):
        raise InternalError(f"maximality checks disagree on {rows}")
    if full is not None:
        return MaximalityError("not a longest hook subword of the rows below it", full)
    return None


@dataclass(frozen=True)
class DecompositionTableau:
    """Semistandard decomposition tableau; ``rows[i]`` is the hook word of row ``i + 1``."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        problem = _ssdt_problem(rows)
        if problem is not None:
            raise problem

    @classmethod
    def _trusted(cls, rows) -> "DecompositionTableau":
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", tuple(tuple(r) for r in rows))
        return obj

    @classmethod
    def parse(cls, text: str) -> "DecompositionTableau":
        return cls(parse_word(" ".join(tokens)) if len(tokens) > 1 else parse_word(tokens[0])
                   for tokens in _split_rows(text))

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def read(self) -> Word:
        return read(self)

    def content(self) -> tuple[int, ...]:
        return content(read(self))

    def __str__(self) -> str:
        return " / ".join(format_word(r) for r in self.rows) if self.rows else "()"


def validate_ssdt(candidate) -> DecompositionTableau:
    if isinstance(candidate, str):
        return DecompositionTableau.parse(candidate)
    if isinstance(candidate, DecompositionTableau):
        candidate = candidate.rows
    return DecompositionTableau(candidate)


def is_ssdt(rows) -> bool:
    return _ssdt_problem(tuple(tuple(r) for r in rows)) is None


def read(r: DecompositionTableau) -> Word:
    """Rows concatenated from the bottom row up."""
    return tuple(a for row in reversed(r.rows) for a in row)


# ---------------------------------------------------------------------------
# SK insertion

def sk_insert_into_row(u: Sequence[int], x: int) -> tuple[Word, int | None]:
    """Insert ``x`` into the hook word ``u``; returns the new row and the bumped letter.

    When ``ux`` is not a hook word, ``x`` replaces the leftmost letter ``y`` of
    the increasing part that exceeds it; ``y`` then replaces the largest letter
    of the decreasing part that is at most ``y``, and that letter is bumped.
    """
    u = tuple(u)
    if is_hook_word(u + (x,)):
        return u + (x,), None
    dec, inc = map(list, hook_split(u))
    j = next(t for t, a in enumerate(inc) if a > x)
    y, inc[j] = inc[j], x
    i = next(t for t, a in enumerate(dec) if a <= y)
    bumped, dec[i] = dec[i], y
    return tuple(dec + inc), bumped


def sk_insert(rows: list[tuple[int, ...]], x: int) -> int:
    """Insert ``x`` into a list of SSDT rows in place; returns the row index that grew."""
    for r in range(len(rows) + 1):
        if r == len(rows):
            rows.append((x,))
            return r
        rows[r], bumped = sk_insert_into_row(rows[r], x)
        if bumped is None:
            return r
        x = bumped
    raise InternalError("unreachable")


class SKResult(NamedTuple):
    p: DecompositionTableau
    q: StandardShiftedTableau


def sk_insertion(word: Sequence[int]) -> SKResult:
    rows: list[tuple[int, ...]] = []
    q: list[list[int]] = []
    for step, x in enumerate(word, 1):
        r = sk_insert(rows, x)
        if r == len(q):
            q.append([])
        q[r].append(step)
    return SKResult(DecompositionTableau._trusted(rows), StandardShiftedTableau._trusted(q))


def sk_insert_word(r: DecompositionTableau, word: Sequence[int]) -> tuple[DecompositionTableau, dict]:
    """Insert ``word`` into ``r``; the second value maps each new cell to its step number."""
    rows = list(r.rows)
    recording = {}
    for step, x in enumerate(word, 1):
        i = sk_insert(rows, x)
        recording[(i + 1, i + len(rows[i]))] = step
    return DecompositionTableau._trusted(rows), recording


def p_sk(word: Sequence[int]) -> DecompositionTableau:
    return sk_insertion(word).p


def q_sk(word: Sequence[int]) -> StandardShiftedTableau:
    return sk_insertion(word).q


def phi(r: DecompositionTableau) -> ShiftedTableau:
    """Shifted tableau with the same reading word: ``P_mix(read(r))``."""
    return p_mix(read(r))


def psi(t: ShiftedTableau) -> DecompositionTableau:
    """Inverse of :func:`phi`: ``P_sk(mread(t))``."""
    return p_sk(mread(t))
