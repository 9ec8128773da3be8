"""Command-line front end: ``shpl <command> [options]``.

Exit status is 0 on success, 1 for domain errors (bad tableau, budget
exceeded, ...) and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import insertion, jdt, rewriting, ssdt
from .core import (
    ShiftedTableau,
    SkewStandardShiftedTableau,
    StandardShiftedTableau,
    contains,
    format_word,
    parse_partition,
    parse_word,
    strict_partitions,
    strict_partitions_upto,
)
from .errors import BudgetError, InternalError, ParseError, ShplError
from .insertion import format_young
from .symfunc import coefficients as coef
from .symfunc import operators as ops
from .symfunc import poly

DEFAULT_MAX_SIZE = 8

APPENDIX_GROUPS = (
    ("aaaa", ("aaaa",)),
    ("aaab", ("aaab", "aaba", "abaa", "baaa")),
    ("abbb", ("abbb", "bbba", "bbab", "babb")),
    ("aabb", ("aabb", "abba", "abab", "baab", "baba", "bbaa")),
    ("aabc", ("aabc", "abca", "abac", "baac", "aacb", "acab", "caab",
              "acba", "caba", "cbaa", "baca", "bcaa")),
    ("abbc", ("abbc", "bbca", "bbac", "babc", "abcb", "acbb", "cabb",
              "bcba", "cbba", "cbab", "bacb", "bcab")),
    ("abcc", ("abcc", "bcca", "bcac", "bacc", "accb", "acbc", "cabc",
              "ccba", "cbca", "cbac", "cacb", "ccab")),
    ("abcd", ("abcd", "bcda", "bcad", "bacd", "acdb", "acbd", "cabd",
              "abdc", "adbc", "dabc", "badc", "bdac", "cadb", "cdab",
              "cdba", "cbda", "cbad", "bdca", "dbca", "dbac", "adcb",
              "dacb", "dcab", "dcba")),
)

_TO_LETTERS = str.maketrans("1234", "abcd")


def emit_appendix_table() -> str:
    """Every 4-letter pattern with its mixed and RSK insertion tableaux, in letters."""
    lines = []
    for title, words in APPENDIX_GROUPS:
        lines.append(f"== {title}")
        for pattern in words:
            w = tuple("abcd".index(ch) + 1 for ch in pattern)
            pm = str(insertion.p_mix(w)).translate(_TO_LETTERS)
            pr = format_young(insertion.p_rsk(w)).translate(_TO_LETTERS)
            lines.append(f"{pattern}\t{pm}\t{pr}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# helpers

def _budget(args) -> int:
    return args.max_size


def _check_budget(n: int, args, what: str) -> None:
    if n > _budget(args):
        raise BudgetError(f"{what} has size {n}; the bound is {_budget(args)} (raise it with --max-size)")


def _shape_str(p) -> str:
    return ",".join(map(str, p)) if p else "()"


def _word_arg(text: str):
    w = parse_word(text)
    if not w:
        raise ParseError("empty word")
    return w


# ---------------------------------------------------------------------------
# commands; each returns (json-able dict, text)

def cmd_insert_mixed(args):
    w = _word_arg(args.word)
    p, q = insertion.mixed_insertion(w)
    return {"word": format_word(w), "p": str(p), "q": str(q), "shape": list(p.shape)}, f"P: {p}\nQ: {q}"


def cmd_insert_sk(args):
    w = _word_arg(args.word)
    p, q = ssdt.sk_insertion(w)
    return {"word": format_word(w), "p": str(p), "q": str(q), "shape": list(p.shape)}, f"P: {p}\nQ: {q}"


def cmd_rsk(args):
    w = _word_arg(args.word)
    p, q = insertion.rsk_insertion(w)
    return {"word": format_word(w), "p": format_young(p), "q": format_young(q)}, f"P: {format_young(p)}\nQ: {format_young(q)}"


def cmd_mread(args):
    t = ShiftedTableau.parse(args.tableau)
    w = insertion.mread(t)
    return {"tableau": str(t), "mread": format_word(w)}, format_word(w)


def cmd_phi(args):
    r = ssdt.validate_ssdt(args.ssdt)
    t = ssdt.phi(r)
    return {"ssdt": str(r), "tableau": str(t)}, str(t)


def cmd_psi(args):
    t = ShiftedTableau.parse(args.tableau)
    r = ssdt.psi(t)
    return {"tableau": str(t), "ssdt": str(r)}, str(r)


def cmd_classes(args):
    vec = parse_partition_vector(args.content)
    _check_budget(sum(vec), args, "content")
    out, text = {}, []
    kinds = ("shifted", "plactic") if args.kind == "both" else (args.kind,)
    for kind in kinds:
        if kind == "shifted":
            blocks = rewriting.enumerate_shifted_classes(vec, max_size=_budget(args))
            key = str
        else:
            blocks = rewriting.enumerate_plactic_classes(vec, max_size=_budget(args))
            key = format_young
        out[kind] = [{"tableau": key(b.tableau), "words": [format_word(w) for w in b.words]} for b in blocks]
        text.append(f"{kind} classes of content {_shape_str(vec)}: {len(blocks)}")
        width = max(len(key(b.tableau)) for b in blocks)
        for b in blocks:
            text.append(f"  {key(b.tableau).ljust(width)}  {' '.join(format_word(w) for w in b.words)}")
    return out, "\n".join(text)


def parse_partition_vector(text: str):
    try:
        vec = tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise ParseError(f"bad content vector {text!r}") from None
    if not vec or any(v < 0 for v in vec):
        raise ParseError(f"bad content vector {text!r}")
    return vec


def cmd_lrcoef(args):
    lam, mu, nu = parse_partition(args.lam), parse_partition(args.mu), parse_partition(args.nu)
    _check_budget(sum(lam), args, "lambda")
    methods = list(coef.LR_METHODS) if args.method == "all" else [args.method]
    values = {m: coef.LR_METHODS[m](lam, mu, nu) for m in methods}
    if len(set(values.values())) != 1:
        raise InternalError(f"methods disagree: {values}")
    value = next(iter(values.values()))
    out = {"coefficient": value, "method": args.method, **values}
    if args.witnesses:
        out["witnesses"] = [str(t) for t in coef.boxadd_witnesses(lam, mu, nu)]
    text = f"b^{_shape_str(lam)}_{{{_shape_str(mu)};{_shape_str(nu)}}} = {value}"
    if len(values) > 1:
        text += "  (" + ", ".join(f"{m}={v}" for m, v in values.items()) + ")"
    if args.witnesses:
        text += "\n" + "\n".join(f"  {w}" for w in out["witnesses"])
    return out, text


def cmd_gcoef(args):
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    _check_budget(sum(lam), args, "lambda")
    values = {}
    if args.method in ("all", "plactic"):
        cw = parse_word(args.class_word) if args.class_word else None
        values["plactic"] = coef.g_coeff_plactic(lam, mu, cw)
    if args.method in ("all", "rectify"):
        values["rectify"] = coef.g_coeff_rectify(lam, mu)
    if len(set(values.values())) != 1:
        raise InternalError(f"methods disagree: {values}")
    value = next(iter(values.values()))
    return ({"coefficient": value, "method": args.method, **values},
            f"g^{_shape_str(lam)}_{{{_shape_str(mu)}}} = {value}")


def cmd_schur(args):
    shape = parse_partition(args.shape)
    _check_budget(sum(shape), args, "shape")
    fn = {"P": poly.schur_p_poly, "Q": poly.schur_q_poly, "s": poly.schur_s_poly}[args.basis]
    p = fn(tuple(shape), args.vars)
    terms = [{"exponent": list(e), "coefficient": c} for e, c in sorted(p.terms.items(), reverse=True)]
    return {"basis": args.basis, "shape": list(shape), "vars": args.vars, "terms": terms}, str(p)


def cmd_rectify(args):
    t = SkewStandardShiftedTableau.parse(args.tableau)
    _check_budget(t.size, args, "tableau")
    r = jdt.shifted_jdt_rectify(t, args.schedule)
    return {"tableau": str(t), "rectification": str(r), "diagonal_word": format_word(jdt.diagonal_word(t))}, str(r)


def cmd_delta(args):
    u = StandardShiftedTableau.parse(args.tableau)
    d = jdt.delta(u)
    return {"tableau": str(u), "delta": str(d)}, str(d)


def cmd_stan(args):
    if args.kind == "word":
        w = _word_arg(args.value)
        out = format_word(jdt.stan_word(w))
    elif args.kind == "tableau":
        out = str(jdt.stan_tableau(ShiftedTableau.parse(args.value)))
    else:
        out = str(jdt.stan_ssdt(ssdt.validate_ssdt(args.value)))
    return {"kind": args.kind, "input": args.value, "stan": out}, out


def _verify(args) -> tuple[bool, str]:
    bound = args.bound if args.bound is not None else _budget(args)
    suite = args.suite
    if suite == "niltlb":
        bad = ops.nil_tl_b_failures(bound)
        rel = ops.relation_failures(bound=bound)
        return not bad and not rel, f"nil-TL-B violations: {len(bad)}; shifted relation violations: {len(rel)} (shapes up to {bound})"
    if suite == "cauchy":
        ok = all(ops.cauchy_check(n, m, d, max_size=max(bound, d))
                 for n in range(1, 4) for m in range(1, 3) for d in range(0, min(4, bound) + 1))
        return ok, f"truncated Cauchy identity, up to 3 operators, 2 variables, degree {min(4, bound)}"
    if suite == "pieri":
        bad = 0
        for mu in strict_partitions_upto(bound - 1):
            for k in range(1, bound - sum(mu) + 1):
                expected = coef.pieri_expand(mu, k)
                got = {lam: coef.lr_coeff_rectify(lam, mu, (k,)) for lam in strict_partitions(sum(mu) + k)}
                bad += {l: c for l, c in got.items() if c} != expected
        return not bad, f"Pieri mismatches: {bad} (total size up to {bound})"
    if suite == "lr-agreement":
        bad = 0
        for n in range(bound + 1):
            for lam in strict_partitions(n):
                for k in range(n + 1):
                    for mu in strict_partitions(k):
                        for nu in strict_partitions(n - k):
                            vals = {f(lam, mu, nu) for f in coef.LR_METHODS.values()}
                            bad += len(vals) != 1
        return not bad, f"three-method disagreements: {bad} (|lambda| up to {bound})"
    if suite == "skew-pschur":
        lines = ["EXPERIMENTAL: rectification classes of skew tableaux (no claim is checked)"]
        for lam in strict_partitions_upto(min(bound, 5)):
            for mu in strict_partitions_upto(sum(lam) - 1):
                if mu and contains(lam, mu):
                    classes = coef.skew_pschur_expand(lam, mu, 2)
                    lines.append(f"  {_shape_str(lam)}/{_shape_str(mu)}: {len(classes)} classes, {sum(classes.values())} tableaux")
        return True, "\n".join(lines)
    raise ShplError(f"unknown suite {suite}")


def cmd_verify(args):
    ok, detail = _verify(args)
    return {"suite": args.suite, "ok": ok, "detail": detail}, f"{'OK' if ok else 'FAILED'}: {detail}"


def cmd_appendix(args):
    text = emit_appendix_table()
    rows = [line.split("\t") for line in text.splitlines() if not line.startswith("==")]
    return {"rows": [{"word": w, "p_mix": pm, "p_rsk": pr} for w, pm, pr in rows]}, text.rstrip("\n")


# ---------------------------------------------------------------------------
# parser

def _env_max_size() -> int:
    raw = os.environ.get("SHPL_MAX_SIZE")
    if raw is None:
        return DEFAULT_MAX_SIZE
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_SIZE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                        help="output format (default text)")
    common.add_argument("--max-size", type=int, default=argparse.SUPPRESS,
                        help=f"enumeration budget (default {DEFAULT_MAX_SIZE}, or $SHPL_MAX_SIZE)")

    parser = argparse.ArgumentParser(prog="shpl", description="Shifted plactic monoid toolkit.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.set_defaults(func=fn)
        return p

    add("insert-mixed", cmd_insert_mixed, "mixed insertion and recording tableaux of a word").add_argument("word")
    add("insert-sk", cmd_insert_sk, "SK insertion tableau (decomposition tableau) and recording tableau").add_argument("word")
    add("rsk", cmd_rsk, "RSK insertion and recording tableaux").add_argument("word")
    add("mread", cmd_mread, "mixed reading word of a shifted tableau, e.g. \"1 1 2 / 2\"").add_argument("tableau")
    add("phi", cmd_phi, "shifted tableau with the same reading word as a decomposition tableau").add_argument("ssdt")
    add("psi", cmd_psi, "decomposition tableau of a shifted tableau (inverse of phi)").add_argument("tableau")

    p = add("classes", cmd_classes, "partition all words of a content into (shifted) plactic classes")
    p.add_argument("--content", required=True, help="content vector, e.g. 3,2")
    p.add_argument("--kind", choices=("shifted", "plactic", "both"), default="both")

    p = add("lrcoef", cmd_lrcoef, "shifted Littlewood-Richardson coefficient b^lambda_{mu,nu}")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--method", choices=("all", "plactic", "rectify", "boxadd"), default="all")
    p.add_argument("--witnesses", action="store_true", help="list the box-adder tableaux")

    p = add("gcoef", cmd_gcoef, "coefficient of s_mu in P_lambda")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True, help="ordinary partition")
    p.add_argument("--method", choices=("all", "plactic", "rectify"), default="all")
    p.add_argument("--class-word", help="word whose plactic class is split (plactic method)")

    p = add("schur", cmd_schur, "Schur P, Q or s polynomial in finitely many variables")
    p.add_argument("--basis", choices=("P", "Q", "s"), default="P")
    p.add_argument("--shape", required=True)
    p.add_argument("--vars", type=int, required=True)

    p = add("rectify", cmd_rectify, "rectify a standard skew shifted tableau, e.g. \"_ _ 1 / 2\"")
    p.add_argument("tableau")
    p.add_argument("--schedule", choices=jdt.SCHEDULES, default="last")

    add("delta", cmd_delta, "remove 1, slide, renumber").add_argument("tableau")

    p = add("stan", cmd_stan, "standardize a word, shifted tableau or decomposition tableau")
    p.add_argument("value")
    p.add_argument("--kind", choices=("word", "tableau", "ssdt"), default="word")

    p = add("verify", cmd_verify, "run an identity suite")
    p.add_argument("--suite", required=True, choices=("cauchy", "niltlb", "pieri", "lr-agreement", "skew-pschur"))
    p.add_argument("--bound", type=int, help="size bound (default: --max-size)")

    add("appendix", cmd_appendix, "table of all 4-letter patterns with their insertion tableaux")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "format"):
        args.format = "text"
    if not hasattr(args, "max_size"):
        args.max_size = _env_max_size()
    try:
        data, text = args.func(args)
    except (ShplError, InternalError) as exc:
        print(f"shpl: error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)
    if args.command == "verify" and not data["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
