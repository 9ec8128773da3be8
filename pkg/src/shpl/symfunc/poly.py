"""Exact sparse polynomials and the Schur P, Q and s generating functions."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Mapping, Sequence

from ..core import Partition, content, shifted_tableaux, strict_partition

Exponent = tuple[int, ...]


class SparsePolynomial:
    """Integer polynomial in ``nvars`` commuting variables ``x1..xm``.

    Terms are kept as ``{exponent vector: coefficient}`` with zero
    coefficients dropped, so equality is plain dictionary equality.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, nvars: int, c: int = 1) -> "SparsePolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: Sequence[int], c: int = 1) -> "SparsePolynomial":
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "SparsePolynomial":
        """The variable ``x_i`` (1-based)."""
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    def _check(self, other: "SparsePolynomial"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable counts differ: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, int):
            other = SparsePolynomial.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePolynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SparsePolynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePolynomial(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = SparsePolynomial.constant(self.nvars, other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, exp: Sequence[int]) -> int:
        return self.terms.get(tuple(exp), 0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def permute(self, perm: Sequence[int]) -> "SparsePolynomial":
        """Substitute ``x_i -> x_{perm[i-1]}`` (``perm`` is 1-based)."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.nvars
            for i, a in enumerate(e):
                new[perm[i] - 1] += a
            out[tuple(new)] = c
        return SparsePolynomial(self.nvars, out)

    def is_symmetric(self) -> bool:
        return all(self.permute(p) == self for p in permutations(range(1, self.nvars + 1)))

    def __repr__(self):
        return f"SparsePolynomial({self.nvars}, {self.terms!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(e, 1) if a
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_sum(polys: Iterable[SparsePolynomial], nvars: int) -> SparsePolynomial:
    out: dict[Exponent, int] = {}
    for p in polys:
        for e, c in p.terms.items():
            out[e] = out.get(e, 0) + c
    return SparsePolynomial(nvars, out)


def _padded(vec: Sequence[int], m: int) -> Exponent:
    return tuple(vec) + (0,) * (m - len(vec))


# ---------------------------------------------------------------------------
# generating functions

@lru_cache(maxsize=None)
def schur_p_poly(shape: Partition, m: int) -> SparsePolynomial:
    """Sum of ``x^T`` over shifted tableaux of ``shape`` with entries at most ``m``."""
    shape = strict_partition(shape)
    counts: dict[Exponent, int] = {}
    for t in shifted_tableaux(shape, m):
        e = _padded(content(t), m)
        counts[e] = counts.get(e, 0) + 1
    if not shape:
        counts = {(0,) * m: 1}
    return SparsePolynomial(m, counts)


def schur_q_poly(shape: Partition, m: int) -> SparsePolynomial:
    shape = strict_partition(shape)
    return schur_p_poly(shape, m) * (2 ** len(shape))


def schur_q_poly_diagonal(shape: Partition, m: int) -> SparsePolynomial:
    """Q-function by direct enumeration, allowing primes on the diagonal."""
    shape = strict_partition(shape)
    counts: dict[Exponent, int] = {}
    for rows in shifted_tableaux(shape, m, diagonal_primes=True):
        vec = [0] * m
        for row in rows:
            for e in row:
                vec[(e + 1) // 2 - 1] += 1
        counts[tuple(vec)] = counts.get(tuple(vec), 0) + 1
    if not shape:
        counts = {(0,) * m: 1}
    return SparsePolynomial(m, counts)


def semistandard_young_tableaux(shape: Sequence[int], m: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard Young tableaux (ordinary shape) with entries at most ``m``."""
    shape = tuple(p for p in shape if p)
    cells = [(i, j) for i, p in enumerate(shape) for j in range(p)]
    grid: dict[tuple[int, int], int] = {}

    def rec(k):
        if k == len(cells):
            yield tuple(tuple(grid[(i, j)] for j in range(p)) for i, p in enumerate(shape))
            return
        i, j = cells[k]
        lo = max(grid.get((i, j - 1), 1), grid.get((i - 1, j), 0) + 1)
        for v in range(lo, m + 1):
            grid[(i, j)] = v
            yield from rec(k + 1)
        grid.pop((i, j), None)

    yield from rec(0)


@lru_cache(maxsize=None)
def schur_s_poly(shape: Partition, m: int) -> SparsePolynomial:
    counts: dict[Exponent, int] = {}
    for t in semistandard_young_tableaux(shape, m):
        vec = [0] * m
        for row in t:
            for v in row:
                vec[v - 1] += 1
        counts[tuple(vec)] = counts.get(tuple(vec), 0) + 1
    return SparsePolynomial(m, counts)
