"""Hamming, symbol-pair and symplectic weights; cyclic shifts; pair reads.

The symbol-pair weight of ``x`` and the symplectic weight of ``(x | L(x))``
coincide, which is what lets a symbol-pair decoder act on CSS errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .gf2 import BitWord


@dataclass(frozen=True, slots=True)
class PairWord:
    """Length-n sequence of bit pairs ``(left[i], right[i])``."""

    left: BitWord
    right: BitWord

    def __post_init__(self) -> None:
        if self.left.length != self.right.length:
            raise ValueError(f"pair halves differ in length: {self.left.length} vs {self.right.length}")

    @classmethod
    def from_pairs(cls, pairs) -> PairWord:
        pairs = list(pairs)
        return cls(BitWord.from_bits(p[0] for p in pairs), BitWord.from_bits(p[1] for p in pairs))

    @classmethod
    def zeros(cls, n: int) -> PairWord:
        return cls(BitWord(n), BitWord(n))

    @classmethod
    def parse(cls, text: str) -> PairWord:
        """Inverse of ``str``: ``"(1,1),(1,0),(0,0)"``."""
        body = text.replace(" ", "")
        if not body:
            return cls.zeros(0)
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"malformed pair word {text!r}")
        pairs = []
        for chunk in body[1:-1].split("),("):
            parts = chunk.split(",")
            if len(parts) != 2 or any(p not in ("0", "1") for p in parts):
                raise ValueError(f"malformed pair ({chunk}) in {text!r}")
            pairs.append((int(parts[0]), int(parts[1])))
        return cls.from_pairs(pairs)

    @property
    def length(self) -> int:
        return self.left.length

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.left.bits, self.right.bits))

    def __len__(self) -> int:
        return self.left.length

    def __add__(self, other: PairWord) -> PairWord:
        return PairWord(self.left + other.left, self.right + other.right)

    __sub__ = __add__

    def __str__(self) -> str:
        return ",".join(f"({l},{r})" for l, r in self.pairs)


def wt_hamming(x: BitWord) -> int:
    return x.value.bit_count()


def wt_sp(x: BitWord) -> int:
    """Number of cyclic positions ``i`` with ``(x[i], x[i+1]) != (0, 0)``."""
    n = x.length
    if n < 2:
        raise ValueError(f"symbol-pair weight needs length >= 2, got {n}")
    v = x.value
    return sum(1 for i in range(n) if (v >> i) & 1 or (v >> ((i + 1) % n)) & 1)


def wt_symplectic(a: BitWord, b: BitWord) -> int:
    """Number of qubits touched by ``X(a) Z(b)``."""
    if a.length != b.length:
        raise ValueError(f"length mismatch: {a.length} vs {b.length}")
    return (a.value | b.value).bit_count()


def shift(x: BitWord, direction: Literal["left", "right"]) -> BitWord:
    """Cyclic shift. ``left``: out[i] = x[i+1]; ``right``: out[i] = x[i-1]."""
    n = x.length
    if n == 0:
        return x
    v = x.value
    mask = (1 << n) - 1
    if direction == "left":
        return BitWord(n, (v >> 1) | ((v & 1) << (n - 1)))
    if direction == "right":
        return BitWord(n, ((v << 1) & mask) | (v >> (n - 1)))
    raise ValueError(f"shift direction must be 'left' or 'right', got {direction!r}")


def shift_left(x: BitWord) -> BitWord:
    return shift(x, "left")


def shift_right(x: BitWord) -> BitWord:
    return shift(x, "right")


def pair_read(c: BitWord) -> PairWord:
    """``((c0,c1), (c1,c2), ..., (c_{n-1},c0))``."""
    if c.length < 2:
        raise ValueError(f"pair read needs length >= 2, got {c.length}")
    return PairWord(c, shift_left(c))


def wt_pair(u: PairWord) -> int:
    return (u.left.value | u.right.value).bit_count()
