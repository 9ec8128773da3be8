"""Alphabets, strict partitions and validated shifted tableau containers.

Letters of the primed alphabet are stored as single integers: ``k`` is ``2k``
and ``k'`` is ``2k - 1``, for negative ``k`` as well, which gives the order
``... < -2' < -2 < -1' < -1 < 1' < 1 < ...``.  Comparison of letters is
integer comparison, and a letter is primed exactly when it is odd.

Words are tuples of plain (unencoded) nonzero integers.  Cells are 1-based
``(row, column)`` pairs in shifted coordinates, so the main diagonal is
``column == row``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import FillingError, ParseError, ShapeError

Cell = tuple[int, int]
Word = tuple[int, ...]
Partition = tuple[int, ...]


# ---------------------------------------------------------------------------
# letters

def letter(value: int, primed: bool = False) -> int:
    """Encode ``value`` (or ``value'``) as an int; ``k' < k`` for every nonzero ``k``."""
    if value == 0:
        raise ValueError("letters are nonzero")
    return 2 * value - int(primed)


def is_primed(e: int) -> bool:
    return e % 2 == 1


def letter_value(e: int) -> int:
    """Signed value of an encoded letter, dropping the prime."""
    return (e + 1) // 2


def prime(e: int) -> int:
    if is_primed(e):
        raise ValueError(f"{format_letter(e)} is already primed")
    return e - 1


def unprime(e: int) -> int:
    if not is_primed(e):
        return e
    return e + 1


def format_letter(e: int) -> str:
    return f"{letter_value(e)}'" if is_primed(e) else str(letter_value(e))


_LETTER_RE = re.compile(r"^(-?\d+)('?)$")


def parse_letter(token: str) -> int:
    m = _LETTER_RE.match(token.strip())
    if not m or int(m.group(1)) == 0:
        raise ParseError(f"bad letter {token!r}")
    return letter(int(m.group(1)), bool(m.group(2)))


# ---------------------------------------------------------------------------
# words

def parse_word(text: str) -> Word:
    """Parse ``"3 4 1"``, ``"3,4,1"`` or the compact digit form ``"341"``.

    The compact form reads each digit as one letter, so it only covers
    letters up to 9.
    """
    text = text.strip()
    if not text:
        return ()
    if re.search(r"[\s,]", text):
        tokens = [t for t in re.split(r"[\s,]+", text) if t]
    elif text.isdigit():
        tokens = list(text)
    else:
        tokens = [text]
    try:
        word = tuple(int(t) for t in tokens)
    except ValueError:
        raise ParseError(f"bad word {text!r}") from None
    if any(a <= 0 for a in word):
        raise ParseError(f"words use positive letters: {text!r}")
    return word


def format_word(word: Sequence[int]) -> str:
    if all(0 < a < 10 for a in word):
        return "".join(map(str, word))
    return " ".join(map(str, word))


def content(obj) -> tuple[int, ...]:
    """Content vector: entry ``i - 1`` counts the letters ``i`` and ``i'``.

    Accepts a word of plain positive integers or any tableau object exposing
    ``letters()`` (encoded) -- shifted tableaux and decomposition tableaux.
    Negative letters are ignored.
    """
    if hasattr(obj, "letters"):
        values = [letter_value(e) for e in obj.letters()]
    else:
        values = list(obj)
    values = [v for v in values if v > 0]
    if not values:
        return ()
    vec = [0] * max(values)
    for v in values:
        vec[v - 1] += 1
    return tuple(vec)


# ---------------------------------------------------------------------------
# strict partitions

def strict_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(parts)
    if any(p <= 0 for p in parts):
        raise ShapeError(f"parts must be positive: {parts}")
    if any(a <= b for a, b in zip(parts, parts[1:])):
        raise ShapeError(f"parts must strictly decrease: {parts}")
    return parts


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0", "()", "-"):
        return ()
    try:
        return tuple(int(t) for t in re.split(r"[\s,]+", text.strip("()")) if t)
    except ValueError:
        raise ParseError(f"bad partition {text!r}") from None


@lru_cache(maxsize=None)
def strict_partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All strict partitions of ``n``, largest first part first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in strict_partitions(n - first, first - 1):
            out.append((first,) + rest)
    return tuple(out)


def strict_partitions_upto(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from strict_partitions(k)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Ordinary partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def shape_cells(shape: Sequence[int]) -> list[Cell]:
    return [(i, i + k) for i, part in enumerate(shape, 1) for k in range(part)]


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def skew_cells(outer: Sequence[int], inner: Sequence[int]) -> list[Cell]:
    if not contains(outer, inner):
        raise ShapeError(f"{tuple(inner)} is not contained in {tuple(outer)}")
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    return [(i, i + k) for i, (a, b) in enumerate(zip(outer, inner), 1) for k in range(b, a)]


def diagonal(cell: Cell) -> int:
    """Diagonal index, 1 on the main diagonal."""
    return cell[1] - cell[0] + 1


def connected_components(cells: Iterable[Cell]) -> int:
    """Number of edge-connected groups among ``cells``."""
    remaining = set(cells)
    count = 0
    while remaining:
        count += 1
        stack = [remaining.pop()]
        while stack:
            r, c = stack.pop()
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in remaining:
                    remaining.remove(nb)
                    stack.append(nb)
    return count


def skew_components(outer: Sequence[int], inner: Sequence[int]) -> int:
    return connected_components(skew_cells(outer, inner))


def is_border_strip(cells: Iterable[Cell]) -> bool:
    """At most one cell per diagonal.

    On ordinary skew shapes this is the usual no-2x2-square condition; on
    shifted ones it also rules out ``(i, i), (i, i + 1), (i + 1, i + 1)``.
    """
    diags = [diagonal(c) for c in cells]
    return len(diags) == len(set(diags))


def removable_corners(shape: Sequence[int]) -> list[Cell]:
    """Cells whose removal leaves a strict partition."""
    out = []
    for i, part in enumerate(shape, 1):
        nxt = shape[i] if i < len(shape) else 0
        if part - 1 > nxt or (part == 1 and i == len(shape)):
            out.append((i, i + part - 1))
    return out


def addable_cells(shape: Sequence[int]) -> list[Cell]:
    """Cells whose addition leaves a strict partition."""
    out = []
    for i, part in enumerate(shape, 1):
        if i == 1 or shape[i - 2] > part + 1:
            out.append((i, i + part))
    if not shape or shape[-1] > 1:
        out.append((len(shape) + 1, len(shape) + 1))
    return out


# ---------------------------------------------------------------------------
# tableaux

def _format_rows(rows, fmt=format_letter) -> str:
    return " / ".join(" ".join(fmt(e) for e in row) for row in rows)


def _split_rows(text: str) -> list[list[str]]:
    text = text.strip()
    if not text or text in ("-", "()", "empty"):
        return []
    return [row.split() for row in text.split("/")]


@dataclass(frozen=True)
class ShiftedTableau:
    """Semistandard shifted tableau; row ``i`` (1-based) starts at column ``i``.

    ``rows`` hold encoded letters.  Constructing one validates it; algorithms
    that already guarantee validity go through :meth:`_trusted`.
    """

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        _check_shifted_filling(rows)

    @classmethod
    def _trusted(cls, rows) -> "ShiftedTableau":
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", tuple(tuple(r) for r in rows))
        return obj

    @classmethod
    def parse(cls, text: str) -> "ShiftedTableau":
        return cls(tuple(parse_letter(t) for t in row) for row in _split_rows(text))

    @classmethod
    def from_values(cls, rows) -> "ShiftedTableau":
        """Build from rows of strings/ints, e.g. ``[[1, 1, "2'"], [2]]``."""
        return cls(tuple(parse_letter(str(t)) for t in row) for row in rows)

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def __len__(self):
        return self.size

    def __getitem__(self, cell: Cell) -> int:
        i, j = cell
        return self.rows[i - 1][j - i]

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.rows) and i <= j < i + len(self.rows[i - 1])

    def cells(self) -> list[Cell]:
        return shape_cells(self.shape)

    def items(self) -> Iterator[tuple[Cell, int]]:
        for i, row in enumerate(self.rows, 1):
            for k, e in enumerate(row):
                yield (i, i + k), e

    def letters(self) -> Iterator[int]:
        for row in self.rows:
            yield from row

    def content(self) -> tuple[int, ...]:
        return content(self)

    def is_standard(self) -> bool:
        vals = sorted(self.letters())
        return vals == [2 * k for k in range(1, len(vals) + 1)]

    def __str__(self) -> str:
        return _format_rows(self.rows) if self.rows else "()"

    def pretty(self) -> str:
        width = max((len(format_letter(e)) for e in self.letters()), default=1)
        lines = []
        for i, row in enumerate(self.rows):
            cells = [format_letter(e).rjust(width) for e in row]
            lines.append(" " * ((width + 1) * i) + " ".join(cells))
        return "\n".join(lines)


def _check_shifted_filling(rows) -> None:
    shape = tuple(len(r) for r in rows)
    if any(p == 0 for p in shape):
        raise ShapeError(f"empty row in filling with row lengths {shape}")
    try:
        strict_partition(shape)
    except ShapeError:
        raise ShapeError(f"row lengths {shape} are not strictly decreasing") from None
    for i, row in enumerate(rows, 1):
        for k, e in enumerate(row):
            j = i + k
            if e == 0:
                raise FillingError("0 is not a letter", (i, j))
            if j == i and is_primed(e):
                raise FillingError(f"primed entry {format_letter(e)} on the main diagonal", (i, j))
            if k > 0:
                left = row[k - 1]
                if left > e:
                    raise FillingError(f"row decreases ({format_letter(left)} before {format_letter(e)})", (i, j))
                if left == e and is_primed(e):
                    raise FillingError(f"{format_letter(e)} repeated in a row", (i, j))
            if i > 1:
                above = rows[i - 2][j - i + 1]
                if above > e:
                    raise FillingError(f"column decreases ({format_letter(above)} above {format_letter(e)})", (i, j))
                if above == e and not is_primed(e):
                    raise FillingError(f"{format_letter(e)} repeated in a column", (i, j))


def validate_tableau(candidate) -> ShiftedTableau:
    """Validate a raw filling (text, rows of encoded letters, or a tableau)."""
    if isinstance(candidate, ShiftedTableau):
        return ShiftedTableau(candidate.rows)
    if isinstance(candidate, str):
        return ShiftedTableau.parse(candidate)
    return ShiftedTableau(candidate)


@dataclass(frozen=True)
class StandardShiftedTableau:
    """Standard shifted tableau holding the plain integers ``1..n``."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = tuple(len(r) for r in rows)
        if any(p == 0 for p in shape):
            raise ShapeError(f"empty row in filling with row lengths {shape}")
        strict_partition(shape)
        n = sum(shape)
        if sorted(e for r in rows for e in r) != list(range(1, n + 1)):
            raise FillingError(f"entries are not exactly 1..{n}")
        for i, row in enumerate(rows, 1):
            for k, e in enumerate(row):
                if k > 0 and row[k - 1] >= e:
                    raise FillingError("row not increasing", (i, i + k))
                if i > 1 and rows[i - 2][k + 1] >= e:
                    raise FillingError("column not increasing", (i, i + k))

    @classmethod
    def _trusted(cls, rows) -> "StandardShiftedTableau":
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", tuple(tuple(r) for r in rows))
        return obj

    @classmethod
    def parse(cls, text: str) -> "StandardShiftedTableau":
        try:
            return cls(tuple(int(t) for t in row) for row in _split_rows(text))
        except ValueError:
            raise ParseError(f"bad standard tableau {text!r}") from None

    @classmethod
    def from_cells(cls, cells: dict) -> "StandardShiftedTableau":
        """Build from a ``{cell: entry}`` mapping covering a straight shape."""
        rows: list[list[tuple[int, int]]] = []
        for (i, j), e in cells.items():
            while len(rows) < i:
                rows.append([])
            rows[i - 1].append((j, e))
        return cls(tuple(e for _, e in sorted(r)) for r in rows)

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def __len__(self):
        return self.size

    def __getitem__(self, cell: Cell) -> int:
        i, j = cell
        return self.rows[i - 1][j - i]

    def items(self) -> Iterator[tuple[Cell, int]]:
        for i, row in enumerate(self.rows, 1):
            for k, e in enumerate(row):
                yield (i, i + k), e

    def as_dict(self) -> dict[Cell, int]:
        return dict(self.items())

    def cell_of(self, entry: int) -> Cell:
        for cell, e in self.items():
            if e == entry:
                return cell
        raise KeyError(entry)

    def __str__(self) -> str:
        return _format_rows(self.rows, str) if self.rows else "()"


@dataclass(frozen=True)
class SkewStandardShiftedTableau:
    """Standard filling of the skew shifted shape ``outer / inner``.

    ``rows[i]`` lists the entries of row ``i + 1`` left to right, starting at
    column ``i + 1 + inner[i]``.
    """

    outer: Partition
    inner: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "outer", strict_partition(self.outer))
        object.__setattr__(self, "inner", strict_partition(self.inner))
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        cells = skew_cells(self.outer, self.inner)
        if len(self.rows) > len(self.outer):
            raise ShapeError("more rows than the outer shape")
        inner = self.inner + (0,) * (len(self.outer) - len(self.inner))
        for r, (a, b) in enumerate(zip(self.outer, inner)):
            have = len(self.rows[r]) if r < len(self.rows) else 0
            if have != a - b:
                raise ShapeError(f"row {r + 1} needs {a - b} entries, got {have}")
        d = self.as_dict()
        if sorted(d.values()) != list(range(1, len(cells) + 1)):
            raise FillingError(f"entries are not exactly 1..{len(cells)}")
        for (i, j), e in d.items():
            for nb in ((i, j + 1), (i + 1, j)):
                if nb in d and d[nb] <= e:
                    raise FillingError("entries must increase along rows and columns", nb)

    @classmethod
    def from_cells(cls, outer, inner, cells: dict) -> "SkewStandardShiftedTableau":
        inner_p = tuple(inner) + (0,) * (len(outer) - len(inner))
        rows = []
        for i, (a, b) in enumerate(zip(outer, inner_p), 1):
            rows.append(tuple(cells[(i, i + k)] for k in range(b, a)))
        return cls(tuple(outer), tuple(inner), tuple(rows))

    @classmethod
    def parse(cls, text: str) -> "SkewStandardShiftedTableau":
        """Parse ``"_ _ _ 1 4 / _ 2 3 5 / 6 7"``; ``_`` or ``.`` marks inner cells."""
        outer, inner, rows = [], [], []
        for tokens in _split_rows(text):
            holes = 0
            while holes < len(tokens) and tokens[holes] in ("_", "."):
                holes += 1
            try:
                vals = tuple(int(t) for t in tokens[holes:])
            except ValueError:
                raise ParseError(f"bad skew tableau {text!r}") from None
            outer.append(len(tokens))
            inner.append(holes)
            rows.append(vals)
        return cls(tuple(outer), tuple(p for p in inner if p), tuple(rows))

    def as_dict(self) -> dict[Cell, int]:
        inner = self.inner + (0,) * (len(self.outer) - len(self.inner))
        out = {}
        for i, (row, b) in enumerate(zip(self.rows, inner), 1):
            for k, e in enumerate(row):
                out[(i, i + b + k)] = e
        return out

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def __str__(self) -> str:
        inner = self.inner + (0,) * (len(self.outer) - len(self.inner))
        return " / ".join(
            " ".join(["_"] * b + [str(e) for e in row]) for row, b in zip(self.rows, inner)
        )


# ---------------------------------------------------------------------------
# vees

def cells_form_vee(cells: dict[Cell, int]) -> bool:
    """Vee test on a ``{cell: entry}`` map whose entries are consecutive."""
    if not cells:
        return True
    if not is_border_strip(cells):
        return False
    order = sorted(cells, key=cells.get)
    for pivot in range(len(order)):
        vertical, horizontal = order[: pivot + 1], order[pivot:]
        if any(a[0] >= b[0] for a, b in zip(vertical, vertical[1:])):
            continue
        if any(a[1] >= b[1] for a, b in zip(horizontal, horizontal[1:])):
            continue
        if all(v[1] < h[1] for v in vertical for h in horizontal if v[0] == h[0] and v != h):
            return True
    return False


def is_vee(t: SkewStandardShiftedTableau) -> bool:
    return cells_form_vee(t.as_dict())


def vee_fillings(cells: Sequence[Cell], start: int = 1) -> list[dict[Cell, int]]:
    """Every vee filling of ``cells`` with entries ``start, start + 1, ...``.

    A vertical cell is the leftmost cell of its row, so a candidate is fixed
    by the pivot and the set of rows contributing a vertical cell.
    """
    cells = list(cells)
    if not cells:
        return [{}]
    cell_set = set(cells)
    rows = sorted({r for r, _ in cells})
    leftmost = {r: min(c for rr, c in cells if rr == r) for r in rows}
    found = []
    for pivot in cells:
        upper = [r for r in rows if r < pivot[0]]
        for mask in range(1 << len(upper)):
            vertical = [(r, leftmost[r]) for k, r in enumerate(upper) if mask >> k & 1]
            vertical.append(pivot)
            vset = set(vertical)
            horizontal = sorted((cell_set - vset) | {pivot}, key=lambda c: c[1])
            if horizontal[0] != pivot:
                continue
            if len({c for _, c in horizontal}) != len(horizontal):
                continue
            filling = {}
            for k, cell in enumerate(vertical):
                filling[cell] = start + k
            for k, cell in enumerate(horizontal):
                filling[cell] = start + len(vertical) - 1 + k
            if cells_form_vee(filling) and filling not in found:
                found.append(filling)
    return found


# ---------------------------------------------------------------------------
# enumeration

def shifted_tableaux(shape: Sequence[int], max_letter: int, diagonal_primes: bool = False) -> Iterator[ShiftedTableau]:
    """All semistandard shifted tableaux of ``shape`` with entries at most ``max_letter``.

    With ``diagonal_primes`` the diagonal may hold primed letters too; those
    fillings are the ones generating Schur Q-functions and are returned as
    raw row tuples rather than validated tableaux.
    """
    shape = strict_partition(shape)
    cells = shape_cells(shape)
    top = 2 * max_letter
    grid: dict[Cell, int] = {}

    def rec(k):
        if k == len(cells):
            rows = tuple(tuple(grid[(i, i + t)] for t in range(p)) for i, p in enumerate(shape, 1))
            yield rows if diagonal_primes else ShiftedTableau._trusted(rows)
            return
        i, j = cells[k]
        lo = 1
        left = grid.get((i, j - 1))
        above = grid.get((i - 1, j))
        if left is not None:
            lo = max(lo, left)
        if above is not None:
            lo = max(lo, above)
        for e in range(lo, top + 1):
            primed = e % 2 == 1
            if primed and i == j and not diagonal_primes:
                continue
            if primed and left == e:
                continue
            if not primed and above == e:
                continue
            grid[(i, j)] = e
            yield from rec(k + 1)
        grid.pop((i, j), None)

    yield from rec(0)


def standard_shifted_tableaux(shape: Sequence[int]) -> Iterator[StandardShiftedTableau]:
    """All standard shifted tableaux of ``shape``, built by adding corners."""
    shape = strict_partition(shape)
    n = sum(shape)

    def rec(current: Partition, filling: dict):
        if sum(current) == n:
            yield StandardShiftedTableau.from_cells(filling) if filling else StandardShiftedTableau(())
            return
        k = sum(current) + 1
        for i, j in addable_cells(current):
            if i > len(shape) or j - i + 1 > shape[i - 1]:
                continue
            nxt = list(current)
            if i > len(nxt):
                nxt.append(1)
            else:
                nxt[i - 1] += 1
            filling[(i, j)] = k
            yield from rec(tuple(nxt), filling)
            del filling[(i, j)]

    yield from rec((), {})


def standard_shifted_tableaux_bruteforce(shape: Sequence[int]) -> list[StandardShiftedTableau]:
    """Reference enumeration: every permutation of ``1..n`` that validates."""
    shape = strict_partition(shape)
    n = sum(shape)
    out = []
    for perm in permutations(range(1, n + 1)):
        rows, k = [], 0
        for p in shape:
            rows.append(perm[k : k + p])
            k += p
        try:
            out.append(StandardShiftedTableau(rows))
        except (FillingError, ShapeError):
            pass
    return out


def skew_standard_shifted_tableaux(outer, inner) -> Iterator[SkewStandardShiftedTableau]:
    """All standard fillings of ``outer / inner``, grown from ``inner``."""
    outer = strict_partition(outer)
    inner = strict_partition(inner)
    target = skew_cells(outer, inner)
    n = len(target)

    def rec(current: Partition, filling: dict):
        if len(filling) == n:
            yield SkewStandardShiftedTableau.from_cells(outer, inner, filling)
            return
        for i, j in addable_cells(current):
            if i > len(outer) or j - i + 1 > outer[i - 1]:
                continue
            nxt = list(current)
            if i > len(nxt):
                nxt.append(1)
            else:
                nxt[i - 1] += 1
            filling[(i, j)] = len(filling) + 1
            yield from rec(tuple(nxt), filling)
            del filling[(i, j)]

    yield from rec(inner, {})


def skew_shifted_tableaux(outer, inner, max_letter: int) -> Iterator[dict[Cell, int]]:
    """Semistandard fillings of ``outer / inner`` as ``{cell: encoded letter}``.

    Diagonal cells of the skew shape may not be primed.
    """
    cells = skew_cells(outer, inner)
    top = 2 * max_letter
    grid: dict[Cell, int] = {}

    def rec(k):
        if k == len(cells):
            yield dict(grid)
            return
        i, j = cells[k]
        left = grid.get((i, j - 1))
        above = grid.get((i - 1, j))
        lo = max([1] + [x for x in (left, above) if x is not None])
        for e in range(lo, top + 1):
            primed = e % 2 == 1
            if primed and (i == j or left == e):
                continue
            if not primed and above == e:
                continue
            grid[(i, j)] = e
            yield from rec(k + 1)
        grid.pop((i, j), None)

    yield from rec(0)
