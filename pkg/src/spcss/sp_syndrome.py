"""Symbol-pair syndromes and the table decoder built on their uniqueness.

For a parity-check matrix ``H`` with rows ``h_j`` and a pair word ``u`` the
symbol-pair syndrome is ``sp[j] = (<h_j, left(u)>, <L(h_j), right(u)>)`` and
the neighbour-symbol syndrome is ``sn[i] = left(u)[i] + right(u)[i-1]``.
Within half the symbol-pair distance the pair ``(sp, sn)`` determines ``u``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb

import numpy as np

from . import kernels
from .gf2 import BitMatrix, BitWord, mv_mul
from .metrics import PairWord, shift_left, shift_right

_NONZERO_PAIRS = ((1, 0), (0, 1), (1, 1))


class TableCollisionError(RuntimeError):
    """Two pair errors inside the radius share a syndrome."""

    def __init__(self, radius: int, collisions: list[tuple[PairWord, PairWord]]):
        self.radius = radius
        self.collisions = collisions
        first, second = collisions[0]
        super().__init__(
            f"{len(collisions)} syndrome collision(s) at radius {radius}; "
            f"first: [{first}] vs [{second}]"
        )


def _interleave(left: int, right: int, m: int) -> int:
    out = 0
    for j in range(m):
        out |= ((left >> j) & 1) << (2 * j) | ((right >> j) & 1) << (2 * j + 1)
    return out


@dataclass(frozen=True, slots=True)
class SpSyndrome:
    """Symbol-pair syndrome (as two length-(n-k) halves) plus neighbour syndrome."""

    sp_left: BitWord
    sp_right: BitWord
    sn: BitWord

    @property
    def sp(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.sp_left.bits, self.sp_right.bits))

    def key(self) -> int:
        """``sp`` flattened pair by pair, then ``sn``, as one integer."""
        m = self.sp_left.length
        return _interleave(self.sp_left.value, self.sp_right.value, m) | (self.sn.value << (2 * m))

    def is_zero(self) -> bool:
        return not (self.sp_left or self.sp_right or self.sn)

    def __str__(self) -> str:
        sp = ",".join(f"({l},{r})" for l, r in self.sp)
        return f"sp={sp} sn={self.sn}"


def shifted_checks(H: BitMatrix) -> BitMatrix:
    """``L(H)``: every row cyclically shifted left."""
    return H.map_rows(shift_left)


def pair_syndromes(u: PairWord, H: BitMatrix) -> SpSyndrome:
    if u.length != H.cols:
        raise ValueError(f"pair word length {u.length} does not match {H.cols} columns")
    return SpSyndrome(
        mv_mul(H, u.left),
        mv_mul(shifted_checks(H), u.right),
        u.left + shift_right(u.right),
    )


def count_pair_errors(n: int, radius: int) -> int:
    return sum(comb(n, j) * 3**j for j in range(min(radius, n) + 1))


def iter_pair_errors(n: int, radius: int):
    """All pair words with at most ``radius`` nonzero pairs, lowest weight first."""
    for w in range(min(radius, n) + 1):
        for positions in combinations(range(n), w):
            for choice in product(_NONZERO_PAIRS, repeat=w):
                left = right = 0
                for pos, (l, r) in zip(positions, choice):
                    left |= l << pos
                    right |= r << pos
                yield left, right


@dataclass(frozen=True)
class SpTable:
    """Syndrome -> pair error map over every pair word of weight <= ``radius``."""

    H: BitMatrix
    radius: int
    entries: dict[int, PairWord] = field(repr=False)

    def __len__(self) -> int:
        return len(self.entries)


def _batch_keys(H: BitMatrix, left: np.ndarray, right: np.ndarray) -> list[int]:
    n, m = H.cols, H.n_rows
    if m:
        s_l = kernels.syndromes(H.packed(), left)
        s_r = kernels.syndromes(shifted_checks(H).packed(), right)
    else:
        s_l = s_r = np.zeros_like(left)
    sn = left ^ kernels.rotate_right(right, n)
    # 2m sp bits must fit in a uint64 for the vectorized interleave
    if 2 * m <= 64:
        flat = np.zeros_like(left)
        for j in range(m):
            bj = np.uint64(j)
            flat |= ((s_l >> bj) & np.uint64(1)) << np.uint64(2 * j)
            flat |= ((s_r >> bj) & np.uint64(1)) << np.uint64(2 * j + 1)
        shift = 2 * m
        return [int(f) | (int(s) << shift) for f, s in zip(flat.tolist(), sn.tolist())]
    return [
        _interleave(int(a), int(b), m) | (int(s) << (2 * m))
        for a, b, s in zip(s_l.tolist(), s_r.tolist(), sn.tolist())
    ]


def build_table(H: BitMatrix, radius: int, max_entries: int = 2_000_000) -> SpTable:
    """Tabulate every pair error of weight <= ``radius`` by its syndrome.

    Raises:
        TableCollisionError: if two of those errors share a syndrome; the
            exception lists every colliding pair found.
    """
    n = H.cols
    if radius < 0:
        raise ValueError(f"negative radius {radius}")
    if n > kernels.MAX_BITS:
        raise ValueError(f"length {n} exceeds the packed-word limit {kernels.MAX_BITS}")
    size = count_pair_errors(n, radius)
    if size > max_entries:
        raise ValueError(f"table would hold {size} entries (limit {max_entries})")
    pairs = list(iter_pair_errors(n, radius))
    left = kernels.as_words(p[0] for p in pairs)
    right = kernels.as_words(p[1] for p in pairs)
    keys = _batch_keys(H, left, right)
    entries: dict[int, PairWord] = {}
    collisions = []
    for key, (l, r) in zip(keys, pairs):
        u = PairWord(BitWord(n, l), BitWord(n, r))
        prior = entries.setdefault(key, u)
        if prior is not u:
            collisions.append((prior, u))
    if collisions:
        raise TableCollisionError(radius, collisions)
    return SpTable(H, radius, entries)


def sp_decode(table: SpTable, s: SpSyndrome) -> PairWord | None:
    if s.sn.length != table.H.cols or s.sp_left.length != table.H.n_rows:
        raise ValueError("syndrome dimensions do not match the table")
    return table.entries.get(s.key())


def classical_pair_decode(y: PairWord, table: SpTable, H: BitMatrix | None = None) -> BitWord | None:
    """Decode a received pair-read vector to a codeword, or None past the radius.

    The corrected read ``y - e`` must be a consistent pair read
    (``right == L(left)``) of a word that passes every parity check.
    """
    H = table.H if H is None else H
    if y.length != H.cols:
        raise ValueError(f"received length {y.length} does not match {H.cols} columns")
    e = sp_decode(table, pair_syndromes(y, H))
    if e is None:
        return None
    z = y - e
    if z.right != shift_left(z.left):
        return None
    if H.n_rows and mv_mul(H, z.left):
        return None
    return z.left
