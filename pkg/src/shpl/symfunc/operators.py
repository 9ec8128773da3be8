"""Diagonal box-adding operators and the identities they satisfy.

Operators act on the span of shifted shapes.  A monomial ``u_{w1} ... u_{wk}``
is encoded by the word ``w`` and applied right to left, so ``w[-1]`` acts
first.  Vectors are dictionaries from shapes (or ``(exponent, shape)``
pairs when a polynomial variable is attached) to integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from ..core import Partition, shifted_tableaux, strict_partition, strict_partitions_upto
from ..errors import BudgetError
from ..insertion import mread
from ..rewriting import SHIFTED_RULES, Rule
from .poly import SparsePolynomial, schur_q_poly

DEFAULT_MAX_SIZE = 12

ShapeMap = Callable[[int, Partition], "Partition | None"]


@lru_cache(maxsize=None)
def box_add(j: int, shape: Partition) -> Partition | None:
    """``u_j(shape)``: add a box on diagonal ``j``, or ``None`` if no valid shape results."""
    if j < 1:
        raise ValueError("diagonals are numbered from 1")
    shape = tuple(shape)
    if j == 1:
        if not shape or shape[-1] > 1:
            return shape + (1,)
        return None
    for i, p in enumerate(shape):
        if p == j - 1:
            if i == 0 or shape[i - 1] > j:
                return shape[:i] + (j,) + shape[i + 1 :]
            return None
    return None


def apply_word(word: Sequence[int], shape: Partition, op: ShapeMap = box_add) -> Partition | None:
    """Apply the monomial ``u_{w1} ... u_{wk}`` to ``shape`` (rightmost letter first)."""
    current: Partition | None = tuple(shape)
    for j in reversed(word):
        current = op(j, current)
        if current is None:
            return None
    return current


@dataclass(frozen=True)
class ShapeOperator:
    """A box-adder restricted to shapes of size at most ``max_size``."""

    j: int
    max_size: int = DEFAULT_MAX_SIZE

    def __call__(self, shape: Partition) -> Partition | None:
        if sum(shape) > self.max_size:
            raise BudgetError(f"shape {shape} is outside the universe of size {self.max_size}")
        out = box_add(self.j, tuple(shape))
        if out is not None and sum(out) > self.max_size:
            raise BudgetError(f"u_{self.j}{tuple(shape)} = {out} leaves the universe of size {self.max_size}")
        return out

    def table(self) -> dict[Partition, Partition | None]:
        return {lam: self(lam) for lam in strict_partitions_upto(self.max_size - 1)}


def budgeted(max_size: int) -> ShapeMap:
    def op(j, shape):
        return ShapeOperator(j, max_size)(shape)

    return op


# ---------------------------------------------------------------------------
# relations

def _universe(bound: int) -> list[Partition]:
    return list(strict_partitions_upto(bound))


def _letter_cap(shape: Partition, length: int) -> int:
    # a word of this length can reach at most diagonal shape[0] + length
    return (shape[0] if shape else 0) + length


def nil_tl_b_failures(bound: int = 10) -> list[tuple[str, tuple[int, ...], Partition]]:
    """Violations of the type B nil-Temperley-Lieb relations on shapes of size at most ``bound``."""
    bad = []
    for lam in _universe(bound):
        cap = _letter_cap(lam, 3)
        for i in range(1, cap + 1):
            if apply_word((i, i), lam) is not None:
                bad.append(("u_i^2 = 0", (i, i), lam))
            if apply_word((i + 1, i, i + 1), lam) is not None:
                bad.append(("u_{i+1} u_i u_{i+1} = 0", (i + 1, i, i + 1), lam))
            if i >= 2 and apply_word((i, i + 1, i), lam) is not None:
                bad.append(("u_i u_{i+1} u_i = 0", (i, i + 1, i), lam))
            for j in range(i + 2, cap + 1):
                if apply_word((i, j), lam) != apply_word((j, i), lam):
                    bad.append(("u_i u_j = u_j u_i", (i, j), lam))
    return bad


def nil_tl_b_check(bound: int = 10) -> bool:
    return not nil_tl_b_failures(bound)


@lru_cache(maxsize=None)
def _instances(rule: Rule, max_letter: int) -> tuple:
    return tuple(rule.instances(max_letter))


def relation_failures(rules: Iterable[Rule] = SHIFTED_RULES, bound: int = 10) -> list[tuple[str, tuple, Partition]]:
    """Rule instances whose two sides act differently on some shape of size at most ``bound``."""
    bad = []
    rules = tuple(rules)
    for lam in _universe(bound):
        for rule in rules:
            for lhs, rhs in _instances(rule, _letter_cap(lam, rule.width)):
                if apply_word(lhs, lam) != apply_word(rhs, lam):
                    bad.append((rule.name, lhs, lam))
    return bad


def relations_check(rules: Iterable[Rule] = SHIFTED_RULES, bound: int = 10) -> bool:
    return not relation_failures(rules, bound)


# ---------------------------------------------------------------------------
# noncommutative Schur P-functions

@lru_cache(maxsize=None)
def nc_schur_p_words(shape: Partition, n: int) -> tuple[tuple[int, ...], ...]:
    """Mixed reading words of the shifted tableaux of ``shape`` with entries at most ``n``.

    Their sum is the noncommutative Schur P-function in ``u_1, ..., u_n``.
    """
    shape = strict_partition(shape)
    if not shape:
        return ((),)
    return tuple(mread(t) for t in shifted_tableaux(shape, n))


def apply_words(words: Iterable[Sequence[int]], vector: Mapping, op: ShapeMap = box_add) -> dict:
    out: dict = {}
    for shape, c in vector.items():
        for w in words:
            img = apply_word(w, shape, op)
            if img is not None:
                out[img] = out.get(img, 0) + c
    return {k: v for k, v in out.items() if v}


def nc_p_commute_check(lam: Partition, mu: Partition, max_size: int = 8) -> bool:
    """``P_lam(u) P_mu(u) = P_mu(u) P_lam(u)`` on every shape of the universe."""
    lam, mu = strict_partition(lam), strict_partition(mu)
    extra = sum(lam) + sum(mu)
    n = max_size
    wl, wm = nc_schur_p_words(lam, n), nc_schur_p_words(mu, n)
    for g in strict_partitions_upto(max_size - extra):
        start = {g: 1}
        if apply_words(wl, apply_words(wm, start)) != apply_words(wm, apply_words(wl, start)):
            return False
    return True


# ---------------------------------------------------------------------------
# Cauchy identity and generalized skew functions

Vector = dict[tuple[tuple[int, ...], Partition], int]


def _apply_factor(vec: Vector, i: int, j: int, series: bool, degree: int, op: ShapeMap) -> Vector:
    """Apply ``1 + x_i u_j`` or, with ``series``, ``(1 - x_i u_j)^{-1}``, truncated."""
    out: Vector = dict(vec)
    for (exp, shape), c in vec.items():
        cur, k = shape, 0
        while True:
            k += 1
            if sum(exp) + k > degree:
                break
            cur = op(j, cur)
            if cur is None:
                break
            new = list(exp)
            new[i - 1] += k
            key = (tuple(new), cur)
            out[key] = out.get(key, 0) + c
            if not series:
                break
    return {k: v for k, v in out.items() if v}


def b_operator_apply(vec: Vector, i: int, n: int, degree: int, op: ShapeMap = box_add) -> Vector:
    """Apply ``(1 + x_i u_n)...(1 + x_i u_1)(1 - x_i u_1)^{-1}...(1 - x_i u_n)^{-1}``."""
    for j in range(n, 0, -1):
        vec = _apply_factor(vec, i, j, True, degree, op)
    for j in range(1, n + 1):
        vec = _apply_factor(vec, i, j, False, degree, op)
    return vec


def cauchy_product_apply(shape: Partition, n: int, m: int, degree: int, op: ShapeMap = box_add) -> Vector:
    """``prod_{i=1..m} B(x_i)`` applied to ``shape``, truncated at total degree ``degree``."""
    vec: Vector = {((0,) * m, tuple(shape)): 1}
    for i in range(m, 0, -1):
        vec = b_operator_apply(vec, i, n, degree, op)
    return vec


def cauchy_sum_apply(shape: Partition, n: int, m: int, degree: int, op: ShapeMap = box_add) -> Vector:
    """``sum_lam Q_lam(x) P_lam(u)`` applied to ``shape``, over ``|lam| <= degree``."""
    out: Vector = {}
    for lam in strict_partitions_upto(degree):
        q = schur_q_poly(lam, m)
        if not q:
            continue
        images = apply_words(nc_schur_p_words(lam, n), {tuple(shape): 1}, op)
        for img, c in images.items():
            for exp, a in q.terms.items():
                key = (exp, img)
                out[key] = out.get(key, 0) + a * c
    return {k: v for k, v in out.items() if v}


def cauchy_check(n_ops: int, m_vars: int, degree: int, max_size: int = DEFAULT_MAX_SIZE) -> bool:
    """Compare both sides of the noncommutative Cauchy identity on every shape that fits."""
    if degree > max_size:
        raise BudgetError(f"degree {degree} exceeds the universe size {max_size}")
    op = budgeted(max_size)
    for g in strict_partitions_upto(max_size - degree):
        if cauchy_product_apply(g, n_ops, m_vars, degree, op) != cauchy_sum_apply(g, n_ops, m_vars, degree, op):
            return False
    return True


def generalized_g(h: Partition, g: Partition, m: int, op: ShapeMap = box_add,
                  n: int | None = None, max_size: int = DEFAULT_MAX_SIZE) -> SparsePolynomial:
    """Coefficient of ``h`` in ``prod_i B(x_i) g`` as a polynomial in ``x_1..x_m``.

    ``op`` must add one box per application, which makes truncating at
    degree ``|h| - |g|`` exact.  With box-adders this is ``Q_{h/g}``.
    """
    h, g = strict_partition(h), strict_partition(g)
    if sum(h) > max_size:
        raise BudgetError(f"shape {h} is outside the universe of size {max_size}")
    degree = sum(h) - sum(g)
    if degree < 0:
        return SparsePolynomial(m)
    if n is None:
        n = h[0] if h else 1
    vec = cauchy_product_apply(g, n, m, degree, op)
    return SparsePolynomial(m, {exp: c for (exp, shape), c in vec.items() if shape == h})
