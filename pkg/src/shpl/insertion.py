"""Semistandard mixed insertion, its inverse, mixed reading words and RSK."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from functools import lru_cache
from typing import NamedTuple, Sequence

from .core import (
    Cell,
    Partition,
    ShiftedTableau,
    StandardShiftedTableau,
    Word,
    format_letter,
    is_primed,
    letter,
    letter_value,
    prime,
    removable_corners,
    skew_cells,
    strict_partition,
    unprime,
    vee_fillings,
)
from .errors import CornerError, InternalError


class BumpStep(NamedTuple):
    cell: Cell
    letter: int  # encoded letter leaving ``cell`` (primed if it left the diagonal)
    direction: str  # "row" or "column": where ``letter`` is inserted next


class InsertionResult(NamedTuple):
    p: object
    q: object


# ---------------------------------------------------------------------------
# mixed insertion on mutable row lists (0-based internally)

def _column_height(rows: list[list[int]], c: int) -> int:
    h = 0
    while h < len(rows) and h <= c and h + len(rows[h]) > c:
        h += 1
    return h


def _insert(rows: list[list[int]], x: int) -> tuple[Cell, list[BumpStep]]:
    trace: list[BumpStep] = []
    r, c, by_row = 0, 0, True
    while True:
        if by_row:
            if r == len(rows):
                rows.append([x])
                return (r + 1, r + 1), trace
            row = rows[r]
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                return (r + 1, r + 1 + k), trace
            a, row[k] = row[k], x
            if k == 0:
                if is_primed(a):
                    raise InternalError(f"primed {format_letter(a)} found on the diagonal")
                x, c, by_row = prime(a), r + 1, False
                trace.append(BumpStep((r + 1, r + 1), x, "column"))
            elif is_primed(a):
                x, c, by_row = a, r + k + 1, False
                trace.append(BumpStep((r + 1, r + k + 1), x, "column"))
            else:
                x, r = a, r + 1
                trace.append(BumpStep((r, r + k), x, "row"))
        else:
            h = _column_height(rows, c)
            i = next((i for i in range(h) if rows[i][c - i] > x), None)
            if i is None:
                if h == c or h >= len(rows) or h + len(rows[h]) != c:
                    raise InternalError(f"primed {format_letter(x)} cannot end column {c + 1}")
                rows[h].append(x)
                return (h + 1, c + 1), trace
            if i == c:
                raise InternalError("column insertion reached the diagonal")
            a, rows[i][c - i] = rows[i][c - i], x
            x = a
            if is_primed(a):
                c += 1
                trace.append(BumpStep((i + 1, c), x, "column"))
            else:
                r, by_row = i + 1, True
                trace.append(BumpStep((i + 1, c + 1), x, "row"))


def _delete(rows: list[list[int]], cell: Cell) -> tuple[int, list[BumpStep]]:
    """Undo the insertion that ended at ``cell``; returns the inserted letter."""
    i, j = cell[0] - 1, cell[1] - 1
    y = rows[i].pop()
    if not rows[i]:
        rows.pop()
    trace = [BumpStep(cell, y, "row" if not is_primed(y) else "column")]
    by_row = not is_primed(y)
    r, c = i - 1, j - 1
    while True:
        if by_row:
            if r < 0:
                return y, trace
            row = rows[r]
            k = bisect_left(row, y) - 1
            if k < 0:
                raise InternalError(f"no entry of row {r + 1} can have bumped {format_letter(y)}")
            if k == 0:
                raise InternalError(f"unprimed {format_letter(y)} cannot leave the diagonal")
            x, row[k] = row[k], y
            y = x
            trace.append(BumpStep((r + 1, r + k + 1), y, "column" if is_primed(y) else "row"))
            if is_primed(y):
                c, by_row = r + k - 1, False
            else:
                r -= 1
        else:
            h = _column_height(rows, c)
            i = next((i for i in reversed(range(h)) if rows[i][c - i] < y), None)
            if i is None:
                raise InternalError(f"no entry of column {c + 1} can have bumped {format_letter(y)}")
            cell_here = (i + 1, c + 1)
            if i == c:
                y, rows[i][0] = rows[i][0], unprime(y)
            else:
                y, rows[i][c - i] = rows[i][c - i], y
            if is_primed(y):
                c -= 1
            else:
                r, by_row = i - 1, True
            trace.append(BumpStep(cell_here, y, "row" if by_row else "column"))


def _as_letter(x) -> int:
    """Word letters are plain signed values; encoded letters pass through."""
    return letter(x)


# ---------------------------------------------------------------------------
# public mixed insertion API

def mixed_insert_letter(t: ShiftedTableau, x: int) -> tuple[ShiftedTableau, Cell, list[BumpStep]]:
    """Mixed-insert the unprimed letter with value ``x`` into ``t``.

    Returns the new tableau, the cell that was added and the bump trace.
    The trace lists, per bump, the cell left by a letter and the letter as
    it travels on (a letter leaving the diagonal is primed).
    """
    rows = [list(r) for r in t.rows]
    cell, trace = _insert(rows, _as_letter(x))
    return ShiftedTableau._trusted(rows), cell, trace


def mixed_delete(t: ShiftedTableau, cell: Cell) -> tuple[ShiftedTableau, int]:
    """Run mixed insertion backwards from the removable corner ``cell``.

    Returns ``(t', x)`` where ``x`` is the plain value of the letter whose
    insertion into ``t'`` produces ``t`` with ``cell`` as its new box.
    """
    cell = tuple(cell)
    if cell not in removable_corners(t.shape):
        raise CornerError(f"{cell} is not a removable corner of shape {t.shape}")
    rows = [list(r) for r in t.rows]
    y, _ = _delete(rows, cell)
    if is_primed(y):
        raise InternalError(f"reverse insertion produced primed {format_letter(y)}")
    return ShiftedTableau._trusted(rows), letter_value(y)


def mixed_delete_trace(t: ShiftedTableau, cell: Cell) -> list[BumpStep]:
    rows = [list(r) for r in t.rows]
    return _delete(rows, tuple(cell))[1]


def mixed_insertion(word: Sequence[int]) -> InsertionResult:
    """``(P_mix(w), Q_mix(w))`` for a word of signed nonzero values."""
    rows: list[list[int]] = []
    q: list[list[int]] = []
    for step, x in enumerate(word, 1):
        (i, _), _ = _insert(rows, _as_letter(x))
        if i > len(q):
            q.append([])
        q[i - 1].append(step)
    return InsertionResult(ShiftedTableau._trusted(rows), StandardShiftedTableau._trusted(q))


def p_mix(word: Sequence[int]) -> ShiftedTableau:
    rows: list[list[int]] = []
    for x in word:
        _insert(rows, _as_letter(x))
    return ShiftedTableau._trusted(rows)


def q_mix(word: Sequence[int]) -> StandardShiftedTableau:
    return mixed_insertion(word).q


def mixed_uninsert(p: ShiftedTableau, q: StandardShiftedTableau) -> Word:
    """Inverse of :func:`mixed_insertion`: the word with insertion pair ``(p, q)``."""
    if p.shape != q.shape:
        raise CornerError(f"shapes differ: {p.shape} vs {q.shape}")
    rows = [list(r) for r in p.rows]
    where = {e: cell for cell, e in q.items()}
    out = []
    for k in range(q.size, 0, -1):
        y, _ = _delete(rows, where[k])
        if is_primed(y):
            raise InternalError(f"reverse insertion produced primed {format_letter(y)}")
        out.append(letter_value(y))
    return tuple(reversed(out))


# ---------------------------------------------------------------------------
# special recording tableaux and mixed reading words

@lru_cache(maxsize=None)
def special_recording_tableau(shape: Partition) -> StandardShiftedTableau:
    """The standard tableau built by stacking connected vees, bottom row first.

    Stage ``i`` grows the shape ``(shape[i+1], ...)`` to ``(shape[i], ...)``
    and the new strip must hold the next ``shape[i]`` entries as a connected
    vee.  Exactly one such filling exists at every stage.
    """
    shape = strict_partition(shape)
    filling: dict[Cell, int] = {}
    current: Partition = ()
    for i in range(len(shape) - 1, -1, -1):
        nxt = shape[i:]
        strip = skew_cells(nxt, current)
        start = len(filling) + 1
        options = []
        for vee in vee_fillings(strip, start):
            merged = {**filling, **vee}
            if all(
                merged.get(nb, 1 << 30) > e
                for (r, c), e in vee.items()
                for nb in ((r, c + 1), (r + 1, c))
            ):
                options.append(vee)
        if len(options) != 1:
            raise InternalError(f"{len(options)} vee fillings for stage {nxt} of {shape}")
        filling.update(options[0])
        current = nxt
    return StandardShiftedTableau.from_cells(filling) if filling else StandardShiftedTableau(())


def mread(t: ShiftedTableau) -> Word:
    """Mixed reading word: the word inserting to ``t`` with special recording tableau."""
    return mixed_uninsert(t, special_recording_tableau(t.shape))


def is_shifted_tableau_word(word: Sequence[int]) -> bool:
    p, q = mixed_insertion(word)
    return q == special_recording_tableau(p.shape)


# ---------------------------------------------------------------------------
# Robinson-Schensted-Knuth

YoungTableau = tuple[tuple[int, ...], ...]


def rsk_insertion(word: Sequence[int]) -> InsertionResult:
    """Classical row insertion; ``p`` and ``q`` are tuples of rows."""
    p: list[list[int]] = []
    q: list[list[int]] = []
    for step, x in enumerate(word, 1):
        r = 0
        while True:
            if r == len(p):
                p.append([x])
                q.append([step])
                break
            row = p[r]
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                q[r].append(step)
                break
            x, row[k] = row[k], x
            r += 1
    return InsertionResult(tuple(map(tuple, p)), tuple(map(tuple, q)))


def p_rsk(word: Sequence[int]) -> YoungTableau:
    return rsk_insertion(word).p


def rsk_uninsert(p: YoungTableau, q: YoungTableau) -> Word:
    rows = [list(r) for r in p]
    where = {e: (i, j) for i, row in enumerate(q) for j, e in enumerate(row)}
    out = []
    for k in range(sum(map(len, q)), 0, -1):
        i, _ = where[k]
        y = rows[i].pop()
        if not rows[i]:
            rows.pop()
        for r in range(i - 1, -1, -1):
            row = rows[r]
            j = bisect_left(row, y) - 1
            y, row[j] = row[j], y
        out.append(y)
    return tuple(reversed(out))


def standard_young_tableaux(shape: Sequence[int]):
    """Standard Young tableaux of an ordinary partition shape."""
    shape = tuple(shape)
    n = sum(shape)

    def rec(current: list[int], rows: list[list[int]], k: int):
        if k > n:
            yield tuple(map(tuple, rows))
            return
        for i in range(len(shape)):
            if current[i] < shape[i] and (i == 0 or current[i - 1] > current[i]):
                current[i] += 1
                if i == len(rows):
                    rows.append([])
                rows[i].append(k)
                yield from rec(current, rows, k + 1)
                rows[i].pop()
                if not rows[i]:
                    rows.pop()
                current[i] -= 1

    yield from rec([0] * len(shape), [], 1)


def format_young(t: YoungTableau) -> str:
    return " / ".join(" ".join(map(str, r)) for r in t) if t else "()"
