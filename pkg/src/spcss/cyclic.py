"""Binary cyclic codes of length n as ideals of GF(2)[x]/(x^n - 1).

Codes are named in the text form ``n=<int> g=<bits>``, with the generator's
coefficients written lowest degree first (``n=7 g=1101`` is ``1 + x + x^3``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

import numpy as np

from . import kernels
from .gf2 import BitMatrix, BitWord, mat_mul, mv_mul, rank
from .metrics import shift_left, shift_right

MAX_ENUM_LENGTH = 31
MAX_EXHAUSTIVE_DIM = 20


@dataclass(frozen=True, slots=True, order=True)
class Gf2Poly:
    """Polynomial over GF(2); bit ``i`` of ``coeffs`` is the coefficient of ``x^i``."""

    coeffs: int = 0

    def __post_init__(self) -> None:
        if self.coeffs < 0:
            raise ValueError("coefficient bitmask must be non-negative")

    @classmethod
    def from_str(cls, text: str) -> Gf2Poly:
        return cls(BitWord.from_str(text).value)

    @classmethod
    def from_word(cls, w: BitWord) -> Gf2Poly:
        return cls(w.value)

    @classmethod
    def monomial(cls, d: int) -> Gf2Poly:
        return cls(1 << d)

    @property
    def degree(self) -> int:
        """Degree; -1 stands in for minus infinity on the zero polynomial."""
        return self.coeffs.bit_length() - 1

    def is_zero(self) -> bool:
        return self.coeffs == 0

    def to_word(self, n: int) -> BitWord:
        if self.degree >= n:
            raise ValueError(f"degree {self.degree} polynomial does not fit in length {n}")
        return BitWord(n, self.coeffs)

    def reciprocal(self, degree: int | None = None) -> Gf2Poly:
        """``x^degree * p(1/x)``; ``degree`` defaults to ``deg p``."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError(f"reciprocal degree {d} below polynomial degree {self.degree}")
        out = 0
        for i in range(d + 1):
            if (self.coeffs >> i) & 1:
                out |= 1 << (d - i)
        return Gf2Poly(out)

    def __add__(self, other: Gf2Poly) -> Gf2Poly:
        return Gf2Poly(self.coeffs ^ other.coeffs)

    __sub__ = __add__

    def __mul__(self, other: Gf2Poly) -> Gf2Poly:
        a, b, out = self.coeffs, other.coeffs, 0
        while b:
            if b & 1:
                out ^= a
            a <<= 1
            b >>= 1
        return Gf2Poly(out)

    def __divmod__(self, other: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: Gf2Poly) -> Gf2Poly:
        return poly_divmod(self, other)[0]

    def __mod__(self, other: Gf2Poly) -> Gf2Poly:
        return poly_divmod(self, other)[1]

    def bits(self, length: int | None = None) -> str:
        if length is None:
            length = max(self.degree + 1, 1)
        return str(BitWord(length, self.coeffs))

    def __str__(self) -> str:
        if self.coeffs == 0:
            return "0"
        terms = []
        for i in range(self.degree + 1):
            if (self.coeffs >> i) & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return "+".join(terms)


def poly_divmod(a: Gf2Poly, b: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly]:
    """Long division ``a = q*b + r`` with ``deg r < deg b``."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.degree
    r, q = a.coeffs, 0
    while r and r.bit_length() - 1 >= db:
        s = r.bit_length() - 1 - db
        q |= 1 << s
        r ^= b.coeffs << s
    return Gf2Poly(q), Gf2Poly(r)


def x_n_minus_1(n: int) -> Gf2Poly:
    return Gf2Poly((1 << n) | 1)


@dataclass(frozen=True)
class CyclicCode:
    """Binary cyclic code ``<g>`` of length ``n``. Build with :func:`from_generator`."""

    n: int
    g: Gf2Poly
    k: int
    h: Gf2Poly
    dual_gen: Gf2Poly
    G: BitMatrix
    H: BitMatrix

    @property
    def spec(self) -> str:
        return format_code_spec(self)

    @property
    def is_zero_code(self) -> bool:
        return self.k == 0

    @property
    def dual_containing(self) -> bool:
        return is_dual_containing(self)

    def __str__(self) -> str:
        return f"[{self.n},{self.k}] cyclic code g={self.g}"


def _shifts(word: BitWord, count: int) -> tuple[BitWord, ...]:
    rows = []
    for _ in range(count):
        rows.append(word)
        word = shift_left(word)
    return tuple(rows)


def from_generator(n: int, g: Gf2Poly) -> CyclicCode:
    """The cyclic code of length ``n`` generated by ``g``.

    ``G`` has rows ``x^i g(x)`` for ``i < k``. ``H`` has rows ``c, L(c), ...,
    L^{n-k-1}(c)`` with ``c`` the coefficient word of the dual generator,
    i.e. the reciprocal of ``h = (x^n - 1)/g``.
    """
    if n < 1:
        raise ValueError(f"code length must be positive, got {n}")
    if g.is_zero():
        raise ValueError("generator polynomial must be nonzero")
    h, rem = poly_divmod(x_n_minus_1(n), g)
    if not rem.is_zero():
        raise ValueError(f"g = {g} does not divide x^{n}-1 (remainder {rem})")
    k = n - g.degree
    dual_gen = h.reciprocal(h.degree)
    G_rows = []
    if k:
        word = g.to_word(n)
        for _ in range(k):
            G_rows.append(word)
            word = shift_right(word)
    H_rows = _shifts(dual_gen.to_word(n), n - k) if k < n else ()
    return CyclicCode(n, g, k, h, dual_gen, BitMatrix(tuple(G_rows), n), BitMatrix(H_rows, n))


def dual(C: CyclicCode) -> CyclicCode:
    """Euclidean dual, generated by ``C.dual_gen``."""
    return from_generator(C.n, C.dual_gen)


def is_dual_containing(C: CyclicCode) -> bool:
    return poly_divmod(C.dual_gen, C.g)[1].is_zero()


def contains(C: CyclicCode, v: BitWord) -> bool:
    """Membership by the parity checks (codeword iff ``H v = 0``)."""
    return not mv_mul(C.H, v) if C.H.n_rows else True


def irreducible_factors(n: int) -> list[Gf2Poly]:
    """Irreducible factors of ``x^n - 1`` by trial division, ascending."""
    f = x_n_minus_1(n)
    factors: list[Gf2Poly] = []
    for d in range(1, n // 2 + 1):
        if f.degree < 2 * d:
            break
        for c in range(1 << d, 1 << (d + 1)):
            p = Gf2Poly(c)
            while True:
                q, r = poly_divmod(f, p)
                if not r.is_zero():
                    break
                factors.append(p)
                f = q
    if f.degree > 0:
        factors.append(f)
    return factors


def enumerate_cyclic_codes(n: int, max_length: int = MAX_ENUM_LENGTH) -> list[CyclicCode]:
    """One code per divisor of ``x^n - 1`` (odd ``n``), ordered by ``(deg g, g)``."""
    if n % 2 == 0:
        raise ValueError(f"enumeration needs odd n (x^n-1 squarefree), got {n}")
    if not 1 <= n <= max_length:
        raise ValueError(f"n = {n} outside the enumeration bound 1..{max_length}")
    factors = irreducible_factors(n)
    gens = set()
    for r in range(len(factors) + 1):
        for subset in combinations(factors, r):
            g = Gf2Poly(1)
            for p in subset:
                g = g * p
            gens.add(g)
    ordered = sorted(gens, key=lambda p: (p.degree, p.coeffs))
    return [from_generator(n, g) for g in ordered]


class Distances(NamedTuple):
    d_h: int
    d_sp: int


def min_distances(C: CyclicCode, max_dim: int = MAX_EXHAUSTIVE_DIM) -> Distances | None:
    """Minimum Hamming and symbol-pair weights over nonzero codewords.

    Returns None for the zero code, where neither distance is defined.
    """
    if C.k == 0:
        return None
    if C.k > max_dim:
        raise ValueError(f"dimension {C.k} exceeds the exhaustive bound {max_dim}")
    if C.n > kernels.MAX_BITS:
        raise ValueError(f"length {C.n} exceeds the packed-word limit {kernels.MAX_BITS}")
    if C.n == 1:
        return Distances(1, 1)
    d_h, d_sp = kernels.span_min_weights(C.G.packed(), C.n)
    return Distances(d_h, d_sp)


def parse_code_spec(text: str) -> CyclicCode:
    """Parse ``"n=7 g=1101"`` into a code."""
    fields: dict[str, str] = {}
    for token in text.split():
        key, sep, value = token.partition("=")
        if not sep or key not in ("n", "g") or not value:
            raise ValueError(f"bad token {token!r} in code spec (expected n=<int> g=<bits>)")
        if key in fields:
            raise ValueError(f"duplicate token {token!r} in code spec")
        fields[key] = value
    for key in ("n", "g"):
        if key not in fields:
            raise ValueError(f"code spec {text!r} is missing {key}=")
    try:
        n = int(fields["n"])
    except ValueError:
        raise ValueError(f"bad token 'n={fields['n']}' in code spec (not an integer)") from None
    try:
        g = Gf2Poly.from_str(fields["g"])
    except ValueError:
        raise ValueError(f"bad token 'g={fields['g']}' in code spec (not a bit string)") from None
    return from_generator(n, g)


def format_code_spec(C: CyclicCode) -> str:
    return f"n={C.n} g={C.g.bits()}"


def check_structure(C: CyclicCode) -> list[str]:
    """Names of violated structural invariants (empty when all hold)."""
    problems = []
    if C.G.n_rows and C.H.n_rows and any(mat_mul(C.G, C.H.transpose()).rows):
        problems.append("G H^T != 0")
    if rank(C.G) != C.k:
        problems.append("rank(G) != k")
    if rank(C.H) != C.n - C.k:
        problems.append("rank(H) != n-k")
    return problems


def codeword_array(C: CyclicCode) -> np.ndarray:
    """All ``2^k`` codewords as packed words (exhaustive; small ``k`` only)."""
    span = np.zeros(1, dtype=np.uint64)
    for row in C.G.packed():
        span = np.concatenate([span, span ^ row])
    return span
