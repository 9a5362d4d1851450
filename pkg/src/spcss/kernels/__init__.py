"""Batch bit kernels over ``uint64``-packed words.

Two interchangeable backends exist: numba-compiled loops and vectorized
numpy. The numba backend is used when numba imports and the environment
variable ``SPCSS_DISABLE_NUMBA`` is unset or ``0``; otherwise numpy.

Kernels:
    hamming_weights(words)        popcount of each word
    sp_weights(words, n)          cyclic symbol-pair weight of each length-n word
    symplectic_weights(a, b)      popcount of ``a | b`` elementwise
    rotate_left(words, n)         L: bit i <- bit i+1 (mod n)
    rotate_right(words, n)        R: bit i <- bit i-1 (mod n)
    syndromes(rows, words)        bit j of result = parity(rows[j] & word)
    span_min_weights(gens, n)     (min Hamming, min symbol-pair) weight over the
                                  nonzero span of ``gens``; (-1, -1) if empty
"""

from __future__ import annotations

import os
from types import ModuleType

import numpy as np

from . import _numpy

MAX_BITS = 64

try:
    from . import _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None

_disabled = os.environ.get("SPCSS_DISABLE_NUMBA", "0").strip().lower() not in ("", "0", "false", "no")

BACKENDS: dict[str, ModuleType] = {"numpy": _numpy}
if _numba is not None:
    BACKENDS["numba"] = _numba

BACKEND = "numba" if (_numba is not None and not _disabled) else "numpy"
_impl = BACKENDS[BACKEND]

hamming_weights = _impl.hamming_weights
sp_weights = _impl.sp_weights
symplectic_weights = _impl.symplectic_weights
rotate_left = _impl.rotate_left
rotate_right = _impl.rotate_right
syndromes = _impl.syndromes
span_min_weights = _impl.span_min_weights


def get_backend(name: str) -> ModuleType:
    """Return the kernel module for ``name`` ("numba" or "numpy")."""
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable kernel backend {name!r}") from None


def as_words(values) -> np.ndarray:
    """Pack Python ints (each < 2**64) into a contiguous uint64 array."""
    return np.asarray(list(values), dtype=np.uint64).reshape(-1)


def all_words(n: int) -> np.ndarray:
    """Every word of length ``n``, in increasing integer order."""
    if not 0 <= n < MAX_BITS:
        raise ValueError(f"exhaustive enumeration needs 0 <= n < {MAX_BITS}, got {n}")
    return np.arange(1 << n, dtype=np.uint64)


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack a (rows, n) 0/1 array into one uint64 word per row, column i -> bit i."""
    bits = np.asarray(bits, dtype=np.uint64)
    n = bits.shape[1]
    if n > MAX_BITS:
        raise ValueError(f"cannot pack {n} > {MAX_BITS} bits")
    shifts = np.arange(n, dtype=np.uint64)
    return np.bitwise_or.reduce(bits << shifts, axis=1)
