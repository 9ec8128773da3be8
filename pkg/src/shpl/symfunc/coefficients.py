"""Shifted Littlewood-Richardson numbers, g-coefficients and Pieri expansions.

Each coefficient has independent algorithms so they can check one another:

* class counting: factor the words of one fixed shifted plactic class;
* rectification: count standard skew fillings that rectify to a fixed tableau;
* box-adders: count tableaux whose reading-word monomial grows the inner shape.

Sizes that do not add up, or an inner shape not contained in the outer
one, give 0.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from ..core import (
    Cell,
    Partition,
    ShiftedTableau,
    connected_components,
    contains,
    diagonal,
    is_border_strip,
    letter,
    partitions,
    skew_cells,
    skew_shifted_tableaux,
    skew_standard_shifted_tableaux,
    standard_shifted_tableaux,
    strict_partition,
    strict_partitions,
)
from ..errors import BudgetError, ShapeError
from ..insertion import (
    mixed_uninsert,
    mread,
    p_mix,
    p_rsk,
    rsk_uninsert,
    special_recording_tableau,
    standard_young_tableaux,
)
from ..jdt import rectify_cells, rsk_to_mixed_recording, skew_rect
from .operators import apply_word


# ---------------------------------------------------------------------------
# tableaux of prescribed content

def _shapes_between(lo: Partition, hi: Partition, size: int) -> Iterator[Partition]:
    """Strict partitions ``nu`` with ``lo <= nu <= hi`` cellwise and ``|nu| = size``."""
    lo_p = lo + (0,) * (len(hi) - len(lo))

    def rec(i, prev, left, acc):
        if i == len(hi):
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        top = min(hi[i], lo_p[i] + left)
        if prev is not None:
            top = min(top, max(prev - 1, 0))
        for p in range(top, lo_p[i] - 1, -1):
            yield from rec(i + 1, p, left - (p - lo_p[i]), acc + [p])

    if size >= sum(lo):
        yield from rec(0, None, size - sum(lo), [])


def shifted_tableaux_with_content(shape: Sequence[int], vec: Sequence[int]) -> Iterator[ShiftedTableau]:
    """Shifted tableaux of ``shape`` and content ``vec``, grown one value at a time.

    The cells holding ``k`` or ``k'`` form a border strip.  Inside it a cell
    with a strip cell below is primed, one with a strip cell to its left is
    unprimed, and the remaining cell of each component is free (unprimed if
    it sits on the diagonal).
    """
    shape = strict_partition(shape)
    vec = tuple(vec)
    if sum(vec) != sum(shape):
        return
    grid: dict[Cell, int] = {}

    def rec(k: int, current: Partition):
        if k == len(vec):
            if current == shape:
                yield ShiftedTableau._trusted(
                    tuple(tuple(grid[(i, i + t)] for t in range(p)) for i, p in enumerate(shape, 1))
                )
            return
        value = k + 1
        for nxt in _shapes_between(current, shape, sum(current) + vec[k]):
            strip = skew_cells(nxt, current)
            if not is_border_strip(strip):
                continue
            cells = set(strip)
            options = []
            for i, j in strip:
                if (i + 1, j) in cells:
                    options.append((letter(value, True),))
                elif (i, j - 1) in cells or i == j:
                    options.append((letter(value),))
                else:
                    options.append((letter(value, True), letter(value)))
            for choice in product(*options):
                grid.update(zip(strip, choice))
                yield from rec(k + 1, nxt)
            for c in strip:
                grid.pop(c, None)

    yield from rec(0, ())


def diagonal_content(outer: Partition, inner: Partition) -> tuple[int, ...]:
    """How many cells of ``outer / inner`` lie on each diagonal ``1, 2, ...``."""
    diags = [diagonal(c) for c in skew_cells(outer, inner)]
    vec = [0] * max(diags, default=0)
    for d in diags:
        vec[d - 1] += 1
    return tuple(vec)


def _normalize(lam, mu, nu) -> tuple[Partition, Partition, Partition] | None:
    lam, mu, nu = strict_partition(lam), strict_partition(mu), strict_partition(nu)
    if sum(mu) + sum(nu) != sum(lam) or not contains(lam, mu):
        return None
    return lam, mu, nu


# ---------------------------------------------------------------------------
# shifted Littlewood-Richardson numbers

def standard_tableau_of(shape: Partition) -> ShiftedTableau:
    """The special recording tableau of ``shape`` read as a tableau over ``1..n``."""
    u = special_recording_tableau(shape)
    return ShiftedTableau._trusted(tuple(tuple(letter(e) for e in row) for row in u.rows))


@lru_cache(maxsize=None)
def _class_factorizations(lam: Partition, k: int) -> dict[tuple[Partition, Partition], int]:
    t = standard_tableau_of(lam)
    pairs: dict[tuple[Partition, Partition], set] = {}
    for q in standard_shifted_tableaux(lam):
        w = mixed_uninsert(t, q)
        pu, pv = p_mix(w[:k]), p_mix(w[k:])
        pairs.setdefault((pu.shape, pv.shape), set()).add((pu, pv))
    return {key: len(v) for key, v in pairs.items()}


def lr_coeff_plactic(lam, mu, nu) -> int:
    """Pairs of shifted plactic classes of shapes ``mu``, ``nu`` whose product is a fixed class of shape ``lam``."""
    norm = _normalize(lam, mu, nu)
    if norm is None:
        return 0
    lam, mu, nu = norm
    return _class_factorizations(lam, sum(mu)).get((mu, nu), 0)


@lru_cache(maxsize=None)
def _rectifications(lam: Partition, mu: Partition) -> Counter:
    out: Counter = Counter()
    for t in skew_standard_shifted_tableaux(lam, mu):
        cells = rectify_cells(t.as_dict(), mu)
        out[tuple(sorted(cells.items()))] += 1
    return out


def lr_coeff_rectify(lam, mu, nu) -> int:
    """Standard fillings of ``lam / mu`` that rectify to the special recording tableau of ``nu``."""
    norm = _normalize(lam, mu, nu)
    if norm is None:
        return 0
    lam, mu, nu = norm
    target = tuple(sorted(special_recording_tableau(nu).items()))
    return _rectifications(lam, mu).get(target, 0)


def lr_coeff_boxadd(lam, mu, nu) -> int:
    """Tableaux ``T`` of shape ``nu`` with ``u^{mread(T)}(mu) = lam``.

    Only tableaux whose content equals the diagonal content of ``lam / mu``
    can qualify, so only those are generated.
    """
    norm = _normalize(lam, mu, nu)
    if norm is None:
        return 0
    lam, mu, nu = norm
    if not nu:
        return 1
    return sum(
        1
        for t in shifted_tableaux_with_content(nu, diagonal_content(lam, mu))
        if apply_word(mread(t), mu) == lam
    )


LR_METHODS = {
    "plactic": lr_coeff_plactic,
    "rectify": lr_coeff_rectify,
    "boxadd": lr_coeff_boxadd,
}


def p_product_expansion(mu, nu, method: str = "plactic") -> dict[Partition, int]:
    """``P_mu P_nu`` as ``{lam: b^lam_{mu nu}}``."""
    fn = LR_METHODS[method]
    n = sum(mu) + sum(nu)
    out = {lam: fn(lam, mu, nu) for lam in strict_partitions(n)}
    return {lam: c for lam, c in out.items() if c}


def boxadd_witnesses(lam, mu, nu) -> list[ShiftedTableau]:
    norm = _normalize(lam, mu, nu)
    if norm is None:
        return []
    lam, mu, nu = norm
    return [t for t in shifted_tableaux_with_content(nu, diagonal_content(lam, mu))
            if apply_word(mread(t), mu) == lam]


# ---------------------------------------------------------------------------
# g-coefficients: P_lam = sum_mu g^lam_mu s_mu

def _size_ok(lam, mu) -> bool:
    return sum(lam) == sum(mu)


def superstandard_young(mu: Sequence[int]):
    rows, k = [], 1
    for p in mu:
        rows.append(tuple(range(k, k + p)))
        k += p
    return tuple(rows)


def plactic_class_words(p) -> list[tuple[int, ...]]:
    shape = tuple(len(r) for r in p)
    return [rsk_uninsert(p, q) for q in standard_young_tableaux(shape)]


def g_coeff_plactic(lam, mu, class_word: Sequence[int] | None = None) -> int:
    """Shifted plactic classes of shape ``lam`` inside one plactic class of shape ``mu``.

    The plactic class defaults to that of the superstandard tableau of
    shape ``mu``; ``class_word`` picks the class of another word instead.
    """
    lam = strict_partition(lam)
    mu = tuple(p for p in mu if p)
    if class_word is not None:
        p = p_rsk(class_word)
        if tuple(len(r) for r in p) != mu:
            raise ShapeError(f"{class_word} does not have insertion shape {mu}")
    else:
        p = superstandard_young(mu)
    if not _size_ok(lam, mu):
        return 0
    classes = {p_mix(w) for w in plactic_class_words(p)}
    return sum(1 for t in classes if t.shape == lam)


def g_coeff_rectify(lam, mu) -> int:
    """Standard Young tableaux of shape ``mu`` rectifying to the special recording tableau of ``lam``."""
    lam = strict_partition(lam)
    mu = tuple(p for p in mu if p)
    if not _size_ok(lam, mu):
        return 0
    target = special_recording_tableau(lam)
    return sum(1 for q in standard_young_tableaux(mu) if rsk_to_mixed_recording(q) == target)


def g_expansion(lam, method: str = "rectify") -> dict[Partition, int]:
    fn = g_coeff_rectify if method == "rectify" else g_coeff_plactic
    out = {mu: fn(lam, mu) for mu in partitions(sum(lam))}
    return {mu: c for mu, c in out.items() if c}


# ---------------------------------------------------------------------------
# Pieri rule and skew classes

def border_strip_extensions(mu, k: int) -> Iterator[Partition]:
    """Strict ``lam`` such that ``lam / mu`` is a border strip with ``k`` cells."""
    mu = strict_partition(mu)
    n = sum(mu) + k
    for lam in strict_partitions(n):
        if contains(lam, mu) and is_border_strip(skew_cells(lam, mu)):
            yield lam


def pieri_expand(mu, k: int) -> dict[Partition, int]:
    """``P_mu P_(k)`` as ``{lam: 2^(c(lam/mu) - 1)}``."""
    if k < 1:
        raise ValueError("k must be positive")
    return {
        lam: 2 ** (connected_components(skew_cells(lam, mu)) - 1)
        for lam in border_strip_extensions(mu, k)
    }


def skew_pschur_expand(lam, mu, m: int, max_cells: int = 8) -> Counter:
    """EXPERIMENTAL: rectification classes of the skew tableaux of ``lam / mu`` with entries at most ``m``.

    Returns a multiset of straight tableaux ``rect(T)``.
    """
    lam, mu = strict_partition(lam), strict_partition(mu)
    if sum(lam) - sum(mu) > max_cells:
        raise BudgetError(f"{sum(lam) - sum(mu)} cells exceeds the bound {max_cells}")
    return Counter(skew_rect(lam, mu, f) for f in skew_shifted_tableaux(lam, mu, m))
