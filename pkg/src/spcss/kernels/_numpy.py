"""Pure-numpy implementations of the bit kernels.

Every array of words is ``uint64`` with bit ``i`` holding coordinate ``i``.
Lengths are limited to 64 bits.
"""

from __future__ import annotations

import numpy as np

_ONE = np.uint64(1)


def _mask(n: int) -> np.uint64:
    return np.uint64((1 << n) - 1)


def hamming_weights(words: np.ndarray) -> np.ndarray:
    return np.bitwise_count(words).astype(np.int64)


def sp_weights(words: np.ndarray, n: int) -> np.ndarray:
    # one pass per pair (x_i, x_{i+1 mod n}), straight from the definition
    out = np.zeros(words.shape, dtype=np.int64)
    for i in range(n):
        j = (i + 1) % n
        lo = (words >> np.uint64(i)) & _ONE
        hi = (words >> np.uint64(j)) & _ONE
        out += (lo | hi).astype(np.int64)
    return out


def symplectic_weights(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a | b).astype(np.int64)


def rotate_left(words: np.ndarray, n: int) -> np.ndarray:
    return ((words >> _ONE) | ((words & _ONE) << np.uint64(n - 1))) & _mask(n)


def rotate_right(words: np.ndarray, n: int) -> np.ndarray:
    return ((words << _ONE) & _mask(n)) | (words >> np.uint64(n - 1))


def syndromes(rows: np.ndarray, words: np.ndarray) -> np.ndarray:
    out = np.zeros(words.shape, dtype=np.uint64)
    for j, row in enumerate(rows):
        parity = np.bitwise_count(words & row) & np.uint8(1)
        out |= parity.astype(np.uint64) << np.uint64(j)
    return out


def span_min_weights(gens: np.ndarray, n: int) -> tuple[int, int]:
    if gens.size == 0:
        return -1, -1
    span = np.zeros(1, dtype=np.uint64)
    for g in gens:
        span = np.concatenate([span, span ^ g])
    nonzero = span[span != 0]
    if nonzero.size == 0:
        return -1, -1
    return int(hamming_weights(nonzero).min()), int(sp_weights(nonzero, n).min())
