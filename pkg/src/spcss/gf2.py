"""Linear algebra over GF(2) on bit-packed words.

A :class:`BitWord` stores its bits in a Python int, coordinate ``i`` at bit
``i``. Text renders coordinate 0 leftmost, so ``BitWord.from_str("1101000")``
is the coefficient word of ``1 + x + x^3`` at length 7.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np


@dataclass(frozen=True, slots=True)
class BitWord:
    """Immutable length-``length`` vector over GF(2)."""

    length: int
    value: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"negative word length {self.length}")
        if self.value < 0 or self.value >> self.length:
            raise ValueError(f"value {self.value:#x} does not fit in {self.length} bits")

    @classmethod
    def from_str(cls, text: str) -> BitWord:
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise ValueError(f"bit string must be over {{0,1}}: {text!r}")
        value = 0
        for i, ch in enumerate(text):
            if ch == "1":
                value |= 1 << i
        return cls(len(text), value)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitWord:
        bits = list(bits)
        value = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"bit {i} is {b!r}, expected 0 or 1")
            value |= b << i
        return cls(len(bits), value)

    @classmethod
    def zeros(cls, n: int) -> BitWord:
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> BitWord:
        return cls(n, (1 << n) - 1)

    @classmethod
    def unit(cls, n: int, i: int) -> BitWord:
        if not 0 <= i < n:
            raise IndexError(f"unit index {i} outside length {n}")
        return cls(n, 1 << i)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.length))

    def support(self) -> list[int]:
        return [i for i in range(self.length) if (self.value >> i) & 1]

    def weight(self) -> int:
        return self.value.bit_count()

    def dot(self, other: BitWord) -> int:
        _check_same_length(self, other)
        return (self.value & other.value).bit_count() & 1

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if i < 0:
            i += self.length
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.value >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __add__(self, other: BitWord) -> BitWord:
        _check_same_length(self, other)
        return BitWord(self.length, self.value ^ other.value)

    __xor__ = __add__
    __sub__ = __add__

    def __and__(self, other: BitWord) -> BitWord:
        _check_same_length(self, other)
        return BitWord(self.length, self.value & other.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return "".join("1" if (self.value >> i) & 1 else "0" for i in range(self.length))

    def __repr__(self) -> str:
        return f"BitWord({str(self)!r})"


def _check_same_length(u: BitWord, v: BitWord) -> None:
    if u.length != v.length:
        raise ValueError(f"length mismatch: {u.length} vs {v.length}")


@dataclass(frozen=True, slots=True)
class BitMatrix:
    """Immutable ``len(rows) x cols`` matrix over GF(2), stored row-wise."""

    rows: tuple[BitWord, ...]
    cols: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        for i, r in enumerate(self.rows):
            if r.length != self.cols:
                raise ValueError(f"row {i} has length {r.length}, expected {self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[BitWord], cols: int | None = None) -> BitMatrix:
        if cols is None:
            if not rows:
                raise ValueError("column count required for a matrix with no rows")
            cols = rows[0].length
        return cls(tuple(rows), cols)

    @classmethod
    def from_strings(cls, rows: Sequence[str], cols: int | None = None) -> BitMatrix:
        return cls.from_rows([BitWord.from_str(r) for r in rows], cols)

    @classmethod
    def from_array(cls, array) -> BitMatrix:
        arr = np.asarray(array, dtype=np.int64) % 2
        return cls(tuple(BitWord.from_bits(row.tolist()) for row in arr), arr.shape[1])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(tuple(BitWord(cols) for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(tuple(BitWord.unit(n, i) for i in range(n)), n)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.cols

    def to_array(self) -> np.ndarray:
        return np.array([r.bits for r in self.rows], dtype=np.uint8).reshape(self.n_rows, self.cols)

    def packed(self) -> np.ndarray:
        """Rows as a uint64 array (requires ``cols <= 64``)."""
        if self.cols > 64:
            raise ValueError(f"cannot pack rows of {self.cols} > 64 bits")
        return np.array([r.value for r in self.rows], dtype=np.uint64)

    def transpose(self) -> BitMatrix:
        cols = []
        for j in range(self.cols):
            value = 0
            for i, r in enumerate(self.rows):
                value |= ((r.value >> j) & 1) << i
            cols.append(BitWord(self.n_rows, value))
        return BitMatrix(tuple(cols), self.n_rows)

    @property
    def T(self) -> BitMatrix:
        return self.transpose()

    def map_rows(self, fn) -> BitMatrix:
        return BitMatrix(tuple(fn(r) for r in self.rows), self.cols)

    def __getitem__(self, i: int) -> BitWord:
        return self.rows[i]

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[BitWord]:
        return iter(self.rows)

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rows)


def hstack(left: BitMatrix, right: BitMatrix) -> BitMatrix:
    """Concatenate column blocks: row i is ``left[i]`` followed by ``right[i]``."""
    if left.n_rows != right.n_rows:
        raise ValueError(f"row count mismatch: {left.n_rows} vs {right.n_rows}")
    shift = left.cols
    rows = tuple(
        BitWord(left.cols + right.cols, l.value | (r.value << shift))
        for l, r in zip(left.rows, right.rows)
    )
    return BitMatrix(rows, left.cols + right.cols)


def vstack(top: BitMatrix, bottom: BitMatrix) -> BitMatrix:
    if top.cols != bottom.cols:
        raise ValueError(f"column count mismatch: {top.cols} vs {bottom.cols}")
    return BitMatrix(top.rows + bottom.rows, top.cols)


def mv_mul(M: BitMatrix, v: BitWord) -> BitWord:
    """``M @ v``: bit i is the GF(2) dot product of row i with ``v``."""
    if v.length != M.cols:
        raise ValueError(f"vector length {v.length} does not match {M.cols} columns")
    value = 0
    for i, r in enumerate(M.rows):
        if (r.value & v.value).bit_count() & 1:
            value |= 1 << i
    return BitWord(M.n_rows, value)


def vm_mul(lam: BitWord, M: BitMatrix) -> BitWord:
    """``lam @ M``: the sum of the rows of ``M`` selected by ``lam``."""
    if lam.length != M.n_rows:
        raise ValueError(f"coefficient length {lam.length} does not match {M.n_rows} rows")
    value = 0
    for i, r in enumerate(M.rows):
        if (lam.value >> i) & 1:
            value ^= r.value
    return BitWord(M.cols, value)


def mat_mul(A: BitMatrix, B: BitMatrix) -> BitMatrix:
    if A.cols != B.n_rows:
        raise ValueError(f"inner dimensions differ: {A.cols} vs {B.n_rows}")
    return BitMatrix(tuple(vm_mul(r, B) for r in A.rows), B.cols)


class Rref(NamedTuple):
    reduced: BitMatrix
    rank: int
    pivots: list[int]


def _reduce(values: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Gauss-Jordan on int rows, pivot search over bits 0..ncols-1 in order."""
    rows = list(values)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        bit = 1 << col
        pivot = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rref(M: BitMatrix) -> Rref:
    """Reduced row-echelon form; zero rows are moved to the bottom."""
    rows, pivots = _reduce([r.value for r in M.rows], M.cols)
    reduced = BitMatrix(tuple(BitWord(M.cols, v) for v in rows), M.cols)
    return Rref(reduced, len(pivots), pivots)


def rank(M: BitMatrix) -> int:
    return rref(M).rank


def solve(M: BitMatrix, y: BitWord) -> BitWord | None:
    """Some ``x`` with ``M @ x == y``, or None if ``y`` is outside the column space."""
    if y.length != M.n_rows:
        raise ValueError(f"right-hand side length {y.length} does not match {M.n_rows} rows")
    aug = [r.value | (((y.value >> i) & 1) << M.cols) for i, r in enumerate(M.rows)]
    rows, pivots = _reduce(aug, M.cols)
    flag = 1 << M.cols
    for v in rows[len(pivots):]:
        if v & flag:
            return None
    x = 0
    for v, col in zip(rows, pivots):
        if v & flag:
            x |= 1 << col
    return BitWord(M.cols, x)


def express_in_rowspace(M: BitMatrix, v: BitWord) -> BitWord | None:
    """Coefficients ``lam`` with ``lam @ M == v``, or None if ``v`` is not in the row space."""
    if v.length != M.cols:
        raise ValueError(f"vector length {v.length} does not match {M.cols} columns")
    return solve(M.transpose(), v)


def nullspace(M: BitMatrix) -> BitMatrix:
    """Basis of ``{x : M @ x == 0}``, one free column per basis vector."""
    rows, pivots = _reduce([r.value for r in M.rows], M.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        x = 1 << free
        for v, col in zip(rows, pivots):
            if (v >> free) & 1:
                x |= 1 << col
        basis.append(BitWord(M.cols, x))
    return BitMatrix(tuple(basis), M.cols)


def rowspace_equal(A: BitMatrix, B: BitMatrix) -> bool:
    if A.cols != B.cols:
        return False
    return rref(A).reduced.rows[: rank(A)] == rref(B).reduced.rows[: rank(B)]


def in_rowspace(M: BitMatrix, v: BitWord) -> bool:
    return express_in_rowspace(M, v) is not None

