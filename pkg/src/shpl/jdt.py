"""Shifted jeu de taquin, the evacuation step Delta, standardization and skew reading words."""

from __future__ import annotations

import random
from typing import Iterator, Mapping, Sequence

from .core import (
    Cell,
    Partition,
    ShiftedTableau,
    SkewStandardShiftedTableau,
    StandardShiftedTableau,
    Word,
    diagonal,
    is_primed,
    letter,
    letter_value,
    removable_corners,
    shape_cells,
    shifted_tableaux,
    strict_partition,
)
from .errors import EmptyError, InternalError, ShapeError
from .insertion import YoungTableau, mread, p_mix
from .ssdt import DecompositionTableau, read

SCHEDULES = ("last", "first")


# ---------------------------------------------------------------------------
# slides

def slide(filling: Mapping[Cell, int], hole: Cell) -> tuple[dict[Cell, int], Cell]:
    """Slide into the empty inner corner ``hole``.

    The smaller of the right and lower neighbours moves into the hole until
    the hole has neither.  Returns the new filling and the cell vacated at
    the outer edge.
    """
    cells = dict(filling)
    if hole in cells:
        raise InternalError(f"{hole} is not empty")
    while True:
        i, j = hole
        options = [c for c in ((i, j + 1), (i + 1, j)) if c in cells]
        if not options:
            return cells, hole
        nxt = min(options, key=cells.__getitem__)
        cells[hole] = cells.pop(nxt)
        hole = nxt


def _shape_minus(shape: Partition, cell: Cell) -> Partition:
    i = cell[0]
    out = list(shape)
    out[i - 1] -= 1
    return tuple(p for p in out if p)


def rectify_cells(filling: Mapping[Cell, int], inner: Sequence[int], schedule: str = "last") -> dict[Cell, int]:
    """Rectify a standard filling of a skew shape with inner shape ``inner``.

    ``schedule`` picks which inner corner to slide into first: the lowest
    (``"last"``) or the highest (``"first"``).
    """
    if schedule not in SCHEDULES:
        raise ValueError(f"unknown schedule {schedule!r}")
    cells = dict(filling)
    inner = strict_partition(inner)
    while inner:
        corners = removable_corners(inner)
        corner = corners[-1] if schedule == "last" else corners[0]
        inner = _shape_minus(inner, corner)
        cells, _ = slide(cells, corner)
    return cells


def all_rectifications(filling: Mapping[Cell, int], inner: Sequence[int]) -> set[tuple]:
    """Rectify along every possible corner order; a set of frozen results."""
    inner = strict_partition(inner)
    if not inner:
        return {tuple(sorted(filling.items()))}
    out = set()
    for corner in removable_corners(inner):
        cells, _ = slide(filling, corner)
        out |= all_rectifications(cells, _shape_minus(inner, corner))
    return out


def shifted_jdt_rectify(t: SkewStandardShiftedTableau, schedule: str = "last") -> StandardShiftedTableau:
    cells = rectify_cells(t.as_dict(), t.inner, schedule)
    return StandardShiftedTableau.from_cells(cells) if cells else StandardShiftedTableau(())


def delta(u: StandardShiftedTableau) -> StandardShiftedTableau:
    """Remove 1, slide into its box, then lower every entry by one."""
    if u.size == 0:
        raise EmptyError("delta needs a nonempty tableau")
    cells = u.as_dict()
    del cells[(1, 1)]
    cells, _ = slide(cells, (1, 1))
    if not cells:
        return StandardShiftedTableau(())
    return StandardShiftedTableau.from_cells({c: e - 1 for c, e in cells.items()})


def rsk_to_mixed_recording(q: YoungTableau) -> StandardShiftedTableau:
    """Rectify a standard Young tableau placed on the skew shifted shape ``(mu + delta) / delta``.

    With ``l`` rows, the ordinary cell ``(i, j)`` sits at shifted cell ``(i, l + j)``.
    """
    q = tuple(tuple(r) for r in q)
    if not q:
        return StandardShiftedTableau(())
    l = len(q)
    cells = {(i, l + j): e for i, row in enumerate(q, 1) for j, e in enumerate(row, 1)}
    staircase = tuple(range(l, 0, -1))
    return StandardShiftedTableau.from_cells(rectify_cells(cells, staircase))


def diagonal_word(t: SkewStandardShiftedTableau) -> Word:
    """Diagonals of the entries ``n, n - 1, ..., 1``: the box-adder word that grows ``t``."""
    where = {e: c for c, e in t.as_dict().items()}
    return tuple(diagonal(where[e]) for e in range(t.size, 0, -1))


# ---------------------------------------------------------------------------
# standardization

def stan_word(w: Sequence[int]) -> Word:
    """Relabel the ``1``s left to right with ``1, 2, ...``, then the ``2``s, and so on."""
    order = sorted(range(len(w)), key=lambda k: (w[k], k))
    out = [0] * len(w)
    for rank, k in enumerate(order, 1):
        out[k] = rank
    return tuple(out)


def stan_tableau(t: ShiftedTableau) -> ShiftedTableau:
    # primed copies of a value sit in distinct rows, unprimed ones in distinct columns
    def key(item):
        (i, j), e = item
        return (letter_value(e), not is_primed(e), i if is_primed(e) else j)

    rows = [list(r) for r in t.rows]
    for rank, ((i, j), e) in enumerate(sorted(t.items(), key=key), 1):
        rows[i - 1][j - i] = letter(rank, is_primed(e))
    return ShiftedTableau._trusted(rows)


def stan_ssdt(r: DecompositionTableau) -> DecompositionTableau:
    labels = iter(stan_word(read(r)))
    bottom_up = [tuple(next(labels) for _ in row) for row in reversed(r.rows)]
    return DecompositionTableau._trusted(reversed(bottom_up))


# ---------------------------------------------------------------------------
# skew mixed reading words

def canonical_negative_filling(inner: Sequence[int]) -> dict[Cell, int]:
    """Number the cells of ``inner`` row by row and send ``k`` to ``k - |inner| - 1``."""
    cells = shape_cells(strict_partition(inner))
    n = len(cells)
    return {c: letter(k - n - 1) for k, c in enumerate(cells, 1)}


def random_negative_filling(inner: Sequence[int], rng: random.Random, max_letter: int = 3) -> dict[Cell, int]:
    """A random semistandard filling of ``inner`` moved into the negative alphabet.

    The shift ``e -> e - 2m - 2`` keeps both order and parity, so primes survive.
    """
    inner = strict_partition(inner)
    if not inner:
        return {}
    choices = list(shifted_tableaux(inner, max_letter))
    t = rng.choice(choices)
    return {c: e - 2 * max_letter - 2 for c, e in t.items()}


def _combined(outer: Partition, filling: Mapping[Cell, int], negative: Mapping[Cell, int]) -> ShiftedTableau:
    cells = {**negative, **filling}
    rows = []
    for i, p in enumerate(outer, 1):
        try:
            rows.append(tuple(cells[(i, i + k)] for k in range(p)))
        except KeyError as exc:
            raise ShapeError(f"cell {exc.args[0]} is not filled") from None
    return ShiftedTableau(rows)


def skew_mread(
    outer: Sequence[int],
    inner: Sequence[int],
    filling: Mapping[Cell, int],
    negative: Mapping[Cell, int] | None = None,
) -> Word:
    """Mixed reading word of a semistandard skew filling ``{cell: encoded letter}``.

    The inner shape is filled from the negative alphabet, the mixed reading
    word of the whole tableau is taken and its negative letters dropped.
    """
    outer = strict_partition(outer)
    if negative is None:
        negative = canonical_negative_filling(inner)
    return tuple(a for a in mread(_combined(outer, filling, negative)) if a > 0)


def skew_rect(outer, inner, filling, negative=None) -> ShiftedTableau:
    return p_mix(skew_mread(outer, inner, filling, negative))


def iter_rectification_classes(outer, inner, fillings) -> Iterator[ShiftedTableau]:
    for f in fillings:
        yield skew_rect(outer, inner, f)
