"""Exhaustive property suites behind ``spcss verify``.

Each suite returns a :class:`SuiteResult` with its own case count; a suite
passes when it records zero failures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil

import numpy as np

from . import kernels
from .css import DecodingFailure, build, rowspace_preserved
from .cyclic import enumerate_cyclic_codes, from_generator, Gf2Poly, min_distances
from .harness import enumerate_errors
from .sp_syndrome import TableCollisionError, build_table, count_pair_errors

SUITES = ("eq1", "lemma1", "thm3", "thm4", "thm6", "struct")
THM6_LENGTHS = (7, 9, 15)
DEFAULT_N_MAX = 12
TABLE_BUDGET = 300_000


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def line(self) -> str:
        extra = f" ({'; '.join(self.notes)})" if self.notes else ""
        return f"{self.name}: {self.cases} cases, {self.failures} failures{extra}"


def eq1(n_max: int = DEFAULT_N_MAX, n_min: int = 2) -> SuiteResult:
    """``wt_sp(x) == wt_symp(x | L(x))`` for every word of every length."""
    res = SuiteResult("eq1")
    for n in range(n_min, n_max + 1):
        x = kernels.all_words(n)
        lhs = kernels.sp_weights(x, n)
        rhs = kernels.symplectic_weights(x, kernels.rotate_left(x, n))
        res.cases += x.size
        res.failures += int(np.count_nonzero(lhs != rhs))
    res.notes.append(f"n={n_min}..{n_max}")
    return res


def lemma1(n_max: int = DEFAULT_N_MAX, n_min: int = 2) -> SuiteResult:
    """``wt_H + 1 <= wt_sp <= 2 wt_H`` whenever ``0 < wt_H < n``."""
    res = SuiteResult("lemma1")
    for n in range(n_min, n_max + 1):
        x = kernels.all_words(n)
        h = kernels.hamming_weights(x)
        sp = kernels.sp_weights(x, n)
        inside = (h > 0) & (h < n)
        bad = inside & ((sp < h + 1) | (sp > 2 * h))
        res.cases += int(np.count_nonzero(inside))
        res.failures += int(np.count_nonzero(bad))
    res.notes.append(f"n={n_min}..{n_max}")
    return res


def _odd_lengths(n_max: int) -> list[int]:
    return [n for n in range(3, n_max + 1, 2)]


def thm3(n_max: int = DEFAULT_N_MAX, budget: int = TABLE_BUDGET) -> SuiteResult:
    """Symbol-pair syndromes are injective up to ``(d_sp - 1) // 2``; one past it they collide on C7."""
    res = SuiteResult("thm3")
    skipped = 0
    for n in _odd_lengths(n_max):
        for C in enumerate_cyclic_codes(n):
            if C.k == 0 or C.k == n:
                continue
            d = min_distances(C)
            radius = (d.d_sp - 1) // 2
            if count_pair_errors(n, radius) > budget:
                skipped += 1
                continue
            res.cases += 1
            try:
                build_table(C.H, radius)
            except TableCollisionError:
                res.failures += 1
    # the bound is tight for C7: radius 3 must collide
    res.cases += 1
    try:
        build_table(from_generator(7, Gf2Poly.from_str("1101")).H, 3)
        res.failures += 1
    except TableCollisionError:
        pass
    if skipped:
        res.notes.append(f"{skipped} codes over the table budget skipped")
    return res


def thm4(n_max: int = DEFAULT_N_MAX) -> SuiteResult:
    """Improved decoding is exact on its whole hypothesis set, every dual-containing code."""
    res = SuiteResult("thm4")
    codes = 0
    for n in _odd_lengths(min(n_max, 20)):
        for C in enumerate_cyclic_codes(n):
            if not C.dual_containing or C.k == n:
                continue
            css = build(C)
            codes += 1
            for e in enumerate_errors(n, css.t_p):
                if not css.in_improved_hypothesis(e):
                    continue
                res.cases += 1
                try:
                    ok = css.decode_improved(css.measure(e)) == e
                except DecodingFailure:
                    ok = False
                res.failures += not ok
    res.notes.append(f"{codes} codes")
    return res


def thm6(lengths: tuple[int, ...] = THM6_LENGTHS) -> SuiteResult:
    """``d_sp >= ceil(3 d_H / 2)`` for cyclic codes with ``2 <= k <= n-1`` and ``d_H < n``."""
    res = SuiteResult("thm6")
    for n in lengths:
        for C in enumerate_cyclic_codes(n):
            if not 2 <= C.k <= n - 1:
                continue
            d = min_distances(C)
            if d.d_h >= n:
                continue
            res.cases += 1
            res.failures += d.d_sp < ceil(3 * d.d_h / 2)
    res.notes.append("n=" + ",".join(map(str, lengths)))
    return res


def struct(n_max: int = DEFAULT_N_MAX) -> SuiteResult:
    """Row-space equality of the two check matrices and ``H R(v) == phi H v`` for all ``v``."""
    res = SuiteResult("struct")
    for n in _odd_lengths(min(n_max, 20)):
        for C in enumerate_cyclic_codes(n):
            if not C.dual_containing or C.k == n:
                continue
            css = build(C)
            res.cases += 1
            res.failures += not rowspace_preserved(css)
            v = kernels.all_words(n)
            lhs = kernels.syndromes(css.H.packed(), kernels.rotate_right(v, n))
            s = kernels.syndromes(css.H.packed(), v)
            rhs = kernels.syndromes(css.phi.packed(), s)
            res.cases += v.size
            res.failures += int(np.count_nonzero(lhs != rhs))
    return res


def run(name: str, n_max: int = DEFAULT_N_MAX) -> list[SuiteResult]:
    if name == "all":
        return [r for s in SUITES for r in run(s, n_max)]
    if name == "thm6":
        return [thm6()]
    by_n_max = {"eq1": eq1, "lemma1": lemma1, "thm3": thm3, "thm4": thm4, "struct": struct}
    if name in by_n_max:
        return [by_n_max[name](n_max)]
    raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
