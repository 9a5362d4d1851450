"""Independent brute-force oracles shared by the tests."""

from __future__ import annotations

from itertools import product

from spcss.gf2 import BitWord

STEANE_H_ROWS = ("1011100", "0111001", "1110010")


def bw(text: str) -> BitWord:
    return BitWord.from_str(text)


def dot_oracle(row: str, vec: str) -> int:
    """Character-level dot product, independent of the packed representation."""
    return sum(int(r) * int(v) for r, v in zip(row, vec)) % 2


def matvec_oracle(rows, vec: str) -> str:
    return "".join(str(dot_oracle(r, vec)) for r in rows)


def cyclic_pairs(x: str) -> list[tuple[int, int]]:
    n = len(x)
    return [(int(x[i]), int(x[(i + 1) % n])) for i in range(n)]


def sp_weight_oracle(x: str) -> int:
    return sum(1 for p in cyclic_pairs(x) if p != (0, 0))


def poly_mul_oracle(a: list[int], b: list[int]) -> list[int]:
    """Schoolbook product of coefficient lists, lowest degree first."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] ^= x & y
    return out


def codewords_oracle(gen_rows: list[str]) -> set[str]:
    """Every GF(2) combination of the generator rows."""
    n = len(gen_rows[0]) if gen_rows else 0
    out = set()
    for coeffs in product((0, 1), repeat=len(gen_rows)):
        acc = [0] * n
        for c, row in zip(coeffs, gen_rows):
            if c:
                acc = [u ^ int(ch) for u, ch in zip(acc, row)]
        out.add("".join(map(str, acc)))
    return out
