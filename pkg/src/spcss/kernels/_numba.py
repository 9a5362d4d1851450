"""Numba-compiled bit kernels; same signatures and results as ``_numpy``."""

from __future__ import annotations

import numpy as np
from numba import njit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True, nogil=True)
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True, nogil=True)
def _mask(n):
    if n >= 64:
        return np.uint64(0xFFFFFFFFFFFFFFFF)
    return (np.uint64(1) << np.uint64(n)) - np.uint64(1)


@njit(cache=True, nogil=True)
def _sp_weight(x, n):
    w = 0
    one = np.uint64(1)
    for i in range(n):
        j = (i + 1) % n
        if ((x >> np.uint64(i)) & one) | ((x >> np.uint64(j)) & one):
            w += 1
    return w


@njit(cache=True, nogil=True)
def hamming_weights(words):
    out = np.empty(words.shape[0], dtype=np.int64)
    for i in range(words.shape[0]):
        out[i] = _popcount(words[i])
    return out


@njit(cache=True, nogil=True)
def sp_weights(words, n):
    out = np.empty(words.shape[0], dtype=np.int64)
    for i in range(words.shape[0]):
        out[i] = _sp_weight(words[i], n)
    return out


@njit(cache=True, nogil=True)
def symplectic_weights(a, b):
    out = np.empty(a.shape[0], dtype=np.int64)
    for i in range(a.shape[0]):
        out[i] = _popcount(a[i] | b[i])
    return out


@njit(cache=True, nogil=True)
def rotate_left(words, n):
    one = np.uint64(1)
    top = np.uint64(n - 1)
    m = _mask(n)
    out = np.empty_like(words)
    for i in range(words.shape[0]):
        x = words[i]
        out[i] = ((x >> one) | ((x & one) << top)) & m
    return out


@njit(cache=True, nogil=True)
def rotate_right(words, n):
    one = np.uint64(1)
    top = np.uint64(n - 1)
    m = _mask(n)
    out = np.empty_like(words)
    for i in range(words.shape[0]):
        x = words[i]
        out[i] = ((x << one) & m) | (x >> top)
    return out


@njit(cache=True, nogil=True)
def syndromes(rows, words):
    out = np.zeros(words.shape[0], dtype=np.uint64)
    for i in range(words.shape[0]):
        w = words[i]
        s = np.uint64(0)
        for j in range(rows.shape[0]):
            if _popcount(w & rows[j]) & 1:
                s |= np.uint64(1) << np.uint64(j)
        out[i] = s
    return out


@njit(cache=True, nogil=True)
def _span_min(gens, n):
    k = gens.shape[0]
    best_h = -1
    best_sp = -1
    cur = np.uint64(0)
    for c in range(1, 1 << k):
        # Gray code: flip the generator at the lowest set bit of c
        tz = 0
        while not (c >> tz) & 1:
            tz += 1
        cur ^= gens[tz]
        if cur == 0:
            continue
        h = _popcount(cur)
        if best_h < 0 or h < best_h:
            best_h = h
        sp = _sp_weight(cur, n)
        if best_sp < 0 or sp < best_sp:
            best_sp = sp
    return best_h, best_sp


def span_min_weights(gens: np.ndarray, n: int) -> tuple[int, int]:
    if gens.size == 0:
        return -1, -1
    h, sp = _span_min(gens, n)
    return int(h), int(sp)
