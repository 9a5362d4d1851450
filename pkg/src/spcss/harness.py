"""Exhaustive and Monte-Carlo drivers comparing the CSS decoders.

Decoders only ever see :class:`Syndromes`. Each injected error is classified
by its residual ``e + e_hat``: identity, a stabilizer (both halves in
``C^perp``), or a logical operator. A decoder failure is tallied separately.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import astuple, dataclass
from enum import Enum
from itertools import combinations, product
from math import comb
from pathlib import Path
from typing import Callable, Iterator

import numpy as np

from . import kernels
from .css import CssCode, DecodingFailure, PauliError, Policy, Syndromes
from .gf2 import BitWord, mv_mul
from .metrics import shift_right, wt_hamming, wt_symplectic

DEFAULT_BUDGET = 2_000_000
DEFAULT_SEED = 42
MC_CHUNK = 10_000

CSV_COLUMNS = ("decoder", "policy", "n", "k_q", "t_H", "t_p", "set_size", "exact", "coset", "miscorrect", "fail")

# (decoder, policy) rows in report order
DECODER_RUNS: tuple[tuple[str, str], ...] = (
    ("standard", "-"),
    ("improved", "-"),
    ("combined", Policy.IMPROVED_FIRST.value),
    ("combined", Policy.STANDARD_FIRST.value),
    ("combined", Policy.MIN_WEIGHT.value),
)


class ResidualClass(str, Enum):
    IDENTITY = "identity"
    STABILIZER = "stabilizer"
    LOGICAL = "logical"


@dataclass
class ReportRow:
    decoder: str
    policy: str
    n: int
    k_q: int
    t_h: int
    t_p: int
    hypothesis_set_size: int = 0
    exact_recoveries: int = 0
    coset_recoveries: int = 0
    miscorrections: int = 0
    failures: int = 0

    def tally(self, outcome: ResidualClass | None) -> None:
        self.hypothesis_set_size += 1
        if outcome is None:
            self.failures += 1
        elif outcome is ResidualClass.IDENTITY:
            self.exact_recoveries += 1
        elif outcome is ResidualClass.STABILIZER:
            self.coset_recoveries += 1
        else:
            self.miscorrections += 1

    def rate(self, count: int) -> float:
        return count / self.hypothesis_set_size if self.hypothesis_set_size else 0.0

    def summary(self) -> str:
        name = self.decoder if self.policy == "-" else f"{self.decoder}[{self.policy}]"
        return (
            f"{name}: set={self.hypothesis_set_size} exact={self.exact_recoveries} "
            f"coset={self.coset_recoveries} miscorrect={self.miscorrections} fail={self.failures}"
        )


def count_errors(n: int, max_wt: int) -> int:
    return sum(comb(n, j) * 3**j for j in range(min(max_wt, n) + 1))


def enumerate_errors(n: int, max_wt: int, budget: int = DEFAULT_BUDGET) -> Iterator[PauliError]:
    """Every ``(a|b)`` of symplectic weight <= ``max_wt``, by weight then position."""
    total = count_errors(n, max_wt)
    if total > budget:
        raise ValueError(f"{total} errors of weight <= {max_wt} at n={n} exceed the budget {budget}")
    # per-qubit Pauli as (x bit, z bit): X, Z, Y
    paulis = ((1, 0), (0, 1), (1, 1))
    for w in range(min(max_wt, n) + 1):
        for positions in combinations(range(n), w):
            for choice in product(paulis, repeat=w):
                a = b = 0
                for pos, (x, z) in zip(positions, choice):
                    a |= x << pos
                    b |= z << pos
                yield PauliError(BitWord(n, a), BitWord(n, b))


def residual_class(css: CssCode, e: PauliError, e_hat: PauliError) -> ResidualClass:
    if e.n != e_hat.n:
        raise ValueError("error lengths differ")
    r = e + e_hat
    if not (r.a or r.b):
        return ResidualClass.IDENTITY
    G = css.code.G
    # x is in C^perp iff it is orthogonal to every generator row of C
    if not mv_mul(G, r.a) and not mv_mul(G, r.b):
        return ResidualClass.STABILIZER
    return ResidualClass.LOGICAL


def _hypothesis(css: CssCode, decoder: str) -> Callable[[PauliError], bool]:
    if decoder == "standard":
        return css.in_standard_hypothesis
    if decoder == "improved":
        return css.in_improved_hypothesis
    return lambda e: css.in_standard_hypothesis(e) or css.in_improved_hypothesis(e)


def _decode_or_none(css: CssCode, s: Syndromes, decoder: str, policy: str) -> PauliError | None:
    try:
        if decoder == "combined":
            return css.decode_combined(s, policy)[0]
        return css.decode(s, decoder)[0]
    except DecodingFailure:
        return None


def _blank_row(css: CssCode, decoder: str, policy: str) -> ReportRow:
    return ReportRow(decoder, policy, css.n, css.quantum_params.k, css.t_h, css.t_p)


def correctable_report(css: CssCode, budget: int = DEFAULT_BUDGET) -> list[ReportRow]:
    """Inject every error of each decoder's guaranteed set and tally outcomes."""
    if css.H.n_rows == 0:
        row = _blank_row(css, "trivial", "-")
        row.tally(ResidualClass.IDENTITY)
        return [row]
    max_wt = max(css.t_p, 2 * css.t_h)
    rows = [_blank_row(css, d, p) for d, p in DECODER_RUNS]
    checks = [_hypothesis(css, d) for d, _ in DECODER_RUNS]
    for e in enumerate_errors(css.n, max_wt, budget):
        s = css.measure(e)
        for row, inside in zip(rows, checks):
            if not inside(e):
                continue
            e_hat = _decode_or_none(css, s, row.decoder, row.policy)
            row.tally(None if e_hat is None else residual_class(css, e, e_hat))
    return rows


def rows_to_csv(rows: list[ReportRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(astuple(row))
    return buf.getvalue()


def write_csv(rows: list[ReportRow], path: str | Path) -> None:
    Path(path).write_text(rows_to_csv(rows), encoding="utf-8")


def _sample_chunk(n: int, p: float, size: int, seed: int, index: int) -> tuple[np.ndarray, np.ndarray]:
    """Depolarizing errors for one chunk; the stream depends only on (seed, index)."""
    rng = np.random.default_rng(np.random.SeedSequence([seed, index]))
    hit = rng.random((size, n)) < p
    kind = rng.integers(0, 3, size=(size, n))  # 0 = X, 1 = Z, 2 = Y
    a = kernels.pack_bits(hit & (kind != 1))
    b = kernels.pack_bits(hit & (kind != 0))
    return a, b


def _classify_batch(css: CssCode, a, b, a_hat, b_hat) -> np.ndarray:
    """0 identity, 1 stabilizer, 2 logical."""
    ra, rb = a ^ a_hat, b ^ b_hat
    G = css.code.G.packed()
    if G.size:
        dual = (kernels.syndromes(G, ra) == 0) & (kernels.syndromes(G, rb) == 0)
    else:
        dual = (ra == 0) & (rb == 0)
    out = np.full(a.shape, 2, dtype=np.int64)
    out[dual] = 1
    out[(ra == 0) & (rb == 0)] = 0
    return out


def monte_carlo(
    css: CssCode,
    p: float,
    trials: int,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
    chunk: int = MC_CHUNK,
) -> list[ReportRow]:
    """Tally residual classes under i.i.d. depolarizing noise of strength ``p``.

    Each qubit is hit with probability ``p`` by X, Z or Y uniformly. Trials are
    drawn in fixed-size chunks, chunk ``i`` from ``SeedSequence([seed, i])``
    (PCG64), so results do not depend on ``workers``.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")
    n = css.n
    H = css.H.packed()
    sizes = [min(chunk, trials - start) for start in range(0, trials, chunk)]

    def sample(i: int):
        a, b = _sample_chunk(n, p, sizes[i], seed, i)
        if H.size:
            return a, b, kernels.syndromes(H, a), kernels.syndromes(H, b)
        zero = np.zeros_like(a)
        return a, b, zero, zero

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(sample, range(len(sizes))))
    else:
        batches = [sample(i) for i in range(len(sizes))]

    m = css.H.n_rows
    rows = []
    for decoder, policy in DECODER_RUNS:
        row = _blank_row(css, decoder, policy)
        cache: dict[tuple[int, int], tuple[int, int] | None] = {}
        for a, b, sa, sb in batches:
            keys = list(zip(sa.tolist(), sb.tolist()))
            for key in set(keys) - cache.keys():
                e_hat = _decode_or_none(css, Syndromes(BitWord(m, key[0]), BitWord(m, key[1])), decoder, policy)
                cache[key] = None if e_hat is None else (e_hat.a.value, e_hat.b.value)
            decoded = [cache[k] for k in keys]
            failed = np.array([d is None for d in decoded], dtype=bool)
            a_hat = kernels.as_words(0 if d is None else d[0] for d in decoded)
            b_hat = kernels.as_words(0 if d is None else d[1] for d in decoded)
            classes = _classify_batch(css, a, b, a_hat, b_hat)
            row.hypothesis_set_size += len(keys)
            row.failures += int(failed.sum())
            ok = ~failed
            row.exact_recoveries += int(np.sum(classes[ok] == 0))
            row.coset_recoveries += int(np.sum(classes[ok] == 1))
            row.miscorrections += int(np.sum(classes[ok] == 2))
        rows.append(row)
    return rows


EXAMPLE_CODE_SPEC = "n=7 g=1101"
EXAMPLE_ERROR = "a=1100000 b=0100000"


def decoder_outcomes(css: CssCode, e: PauliError) -> dict[str, bool]:
    """Whether each of the two base decoders recovers ``e`` bit-exactly."""
    s = css.measure(e)
    return {name: _decode_or_none(css, s, name, "-") == e for name in ("improved", "standard")}


def verify_paper_example(css: CssCode) -> bool:
    """The length-7 worked example: improved decoding succeeds, standard does not."""
    if css.n != 7 or css.code.g.bits() != "1101":
        raise ValueError(f"worked example needs the code {EXAMPLE_CODE_SPEC}, got {css.code.spec}")
    e = PauliError.parse(EXAMPLE_ERROR)
    if wt_symplectic(e.a, e.b) != 2 or wt_hamming(e.b + shift_right(e.a)) != 1:
        return False
    outcome = decoder_outcomes(css, e)
    return outcome["improved"] and not outcome["standard"]
