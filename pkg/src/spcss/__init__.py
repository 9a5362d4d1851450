"""Symbol-pair decoding for CSS codes built from dual-containing binary cyclic codes."""

from .css import CssCode, DecodingFailure, PauliError, Policy, Syndromes, build
from .cyclic import CyclicCode, Gf2Poly, enumerate_cyclic_codes, from_generator, min_distances, parse_code_spec
from .gf2 import BitMatrix, BitWord
from .metrics import PairWord, pair_read, shift, wt_hamming, wt_pair, wt_sp, wt_symplectic

__all__ = [
    "BitMatrix",
    "BitWord",
    "CssCode",
    "CyclicCode",
    "DecodingFailure",
    "Gf2Poly",
    "PairWord",
    "PauliError",
    "Policy",
    "Syndromes",
    "build",
    "enumerate_cyclic_codes",
    "from_generator",
    "min_distances",
    "pair_read",
    "parse_code_spec",
    "shift",
    "wt_hamming",
    "wt_pair",
    "wt_sp",
    "wt_symplectic",
]
