"""CSS codes from dual-containing cyclic codes and their decoders.

With ``C`` cyclic and ``C^perp <= C`` the single matrix ``H`` of ``C`` checks
both error halves. Because the rows of ``H`` are consecutive shifts, the
matrix ``[H | L(H); 0 | H]`` has the same row space as ``[H | 0; 0 | H]``, and
its upper block measures ``H (b + R(a))`` on the flipped error ``(b | a)``.
That lets :meth:`CssCode.decode_improved` assemble a full symbol-pair
syndrome from the ordinary CSS syndromes and look the error up in the
symbol-pair table, reaching past ``t_H`` into the symbol-pair radius.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import NamedTuple

from .cyclic import CyclicCode, Distances, is_dual_containing, min_distances
from .gf2 import BitMatrix, BitWord, hstack, mv_mul, rowspace_equal, solve, vstack
from .metrics import PairWord, shift_left, shift_right, wt_hamming, wt_symplectic
from .sp_syndrome import SpSyndrome, SpTable, build_table, sp_decode

MAX_CSS_LENGTH = 20


@dataclass(frozen=True, slots=True)
class PauliError:
    """Symplectic error ``(a | b)``: ``a`` is the X part, ``b`` the Z part."""

    a: BitWord
    b: BitWord

    def __post_init__(self) -> None:
        if self.a.length != self.b.length:
            raise ValueError(f"X and Z parts differ in length: {self.a.length} vs {self.b.length}")

    @classmethod
    def parse(cls, text: str) -> PauliError:
        """Parse ``"a=1100000 b=0100000"``."""
        parts = dict(_key_values(text, ("a", "b")))
        return cls(BitWord.from_str(parts["a"]), BitWord.from_str(parts["b"]))

    @classmethod
    def identity(cls, n: int) -> PauliError:
        return cls(BitWord(n), BitWord(n))

    @property
    def n(self) -> int:
        return self.a.length

    def weight(self) -> int:
        return wt_symplectic(self.a, self.b)

    def __add__(self, other: PauliError) -> PauliError:
        return PauliError(self.a + other.a, self.b + other.b)

    def __str__(self) -> str:
        return f"a={self.a} b={self.b}"


@dataclass(frozen=True, slots=True)
class Syndromes:
    s_a: BitWord
    s_b: BitWord

    @classmethod
    def parse(cls, text: str) -> Syndromes:
        """Parse ``"sa=110 sb=011"``."""
        parts = dict(_key_values(text, ("sa", "sb")))
        return cls(BitWord.from_str(parts["sa"]), BitWord.from_str(parts["sb"]))

    def __str__(self) -> str:
        return f"sa={self.s_a} sb={self.s_b}"


def _key_values(text: str, keys: tuple[str, ...]):
    seen = {}
    for token in text.split():
        key, sep, value = token.partition("=")
        if not sep or key not in keys or key in seen:
            raise ValueError(f"bad token {token!r} (expected {' '.join(k + '=<bits>' for k in keys)})")
        seen[key] = value
    missing = [k for k in keys if k not in seen]
    if missing:
        raise ValueError(f"{text!r} is missing {', '.join(k + '=' for k in missing)}")
    return seen.items()


class DecodingFailure(Exception):
    """A decoder lookup missed; ``stage`` names which one."""

    def __init__(self, stage: str):
        self.stage = stage
        super().__init__(f"decoding failed at stage {stage!r}")


class Policy(str, Enum):
    IMPROVED_FIRST = "improved_first"
    STANDARD_FIRST = "standard_first"
    MIN_WEIGHT = "min_weight"


class QuantumParams(NamedTuple):
    n: int
    k: int
    d_lower: int


@dataclass(frozen=True)
class CssCode:
    """Compiled decoder state for the CSS code of ``(C, C^perp)``. Use :func:`build`."""

    code: CyclicCode
    distances: Distances
    t_h: int
    t_p: int
    H: BitMatrix
    phi: BitMatrix
    hamming_table: dict[int, BitWord] = field(repr=False)
    sp_table: SpTable = field(repr=False)

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def quantum_params(self) -> QuantumParams:
        return QuantumParams(self.n, 2 * self.k - self.n, self.distances.d_h)

    def syndrome_length(self) -> int:
        return self.H.n_rows

    def measure(self, e: PauliError) -> Syndromes:
        if e.n != self.n:
            raise ValueError(f"error length {e.n} does not match code length {self.n}")
        return Syndromes(mv_mul(self.H, e.a), mv_mul(self.H, e.b))

    def transform_syndromes(self, s: Syndromes) -> tuple[BitWord, BitWord]:
        """``(H R(a), H (b + R(a)))`` computed from ``(H a, H b)`` alone."""
        self._check_syndromes(s)
        s_ra = mv_mul(self.phi, s.s_a)
        return s_ra, s.s_b + s_ra

    def hamming_decode(self, s: BitWord) -> BitWord | None:
        """The word of weight <= ``t_h`` with syndrome ``s``, if one exists."""
        if s.length != self.H.n_rows:
            raise ValueError(f"syndrome length {s.length} does not match {self.H.n_rows}")
        return self.hamming_table.get(s.value)

    def decode_improved(self, s: Syndromes) -> PauliError:
        """Symbol-pair decoding of the flipped error ``(b | a)``.

        Exact whenever ``wt_symp(a|b) <= t_p`` and ``wt_H(b + R(a)) <= t_h``.

        Raises:
            DecodingFailure: stage ``"ml"`` if no word of weight <= ``t_h``
                explains ``H (b + R(a))``; stage ``"sp"`` if the assembled
                symbol-pair syndrome is not in the table.
        """
        s_ra, s_prime = self.transform_syndromes(s)
        f = self.hamming_decode(s_prime)
        if f is None:
            raise DecodingFailure("ml")
        u = sp_decode(self.sp_table, SpSyndrome(s.s_b, s_ra, f))
        if u is None:
            raise DecodingFailure("sp")
        # left half of the pair error is b, right half is a
        return PauliError(u.right, u.left)

    def decode_standard(self, s: Syndromes) -> PauliError:
        """Independent bounded-distance decoding of the X and Z halves."""
        self._check_syndromes(s)
        a = self.hamming_decode(s.s_a)
        if a is None:
            raise DecodingFailure("standard-x")
        b = self.hamming_decode(s.s_b)
        if b is None:
            raise DecodingFailure("standard-z")
        return PauliError(a, b)

    def decode_combined(self, s: Syndromes, policy: Policy | str = Policy.IMPROVED_FIRST) -> tuple[PauliError, str]:
        """Run both decoders and arbitrate; returns ``(error, "improved" | "standard")``."""
        policy = Policy(policy)
        candidates: dict[str, PauliError] = {}
        for name, decoder in (("improved", self.decode_improved), ("standard", self.decode_standard)):
            try:
                candidates[name] = decoder(s)
            except DecodingFailure:
                pass
        if not candidates:
            raise DecodingFailure("combined")
        if policy is Policy.IMPROVED_FIRST:
            order = ("improved", "standard")
        elif policy is Policy.STANDARD_FIRST:
            order = ("standard", "improved")
        else:
            # ties go to standard
            order = tuple(sorted(candidates, key=lambda k: (candidates[k].weight(), k != "standard")))
        tag = next(name for name in order if name in candidates)
        return candidates[tag], tag

    def decode(self, s: Syndromes, decoder: str = "improved", policy: Policy | str = Policy.IMPROVED_FIRST) -> tuple[PauliError, str]:
        if decoder == "improved":
            return self.decode_improved(s), "improved"
        if decoder == "standard":
            return self.decode_standard(s), "standard"
        if decoder == "combined":
            return self.decode_combined(s, policy)
        raise ValueError(f"unknown decoder {decoder!r}")

    def in_improved_hypothesis(self, e: PauliError) -> bool:
        return e.weight() <= self.t_p and wt_hamming(e.b + shift_right(e.a)) <= self.t_h

    def in_standard_hypothesis(self, e: PauliError) -> bool:
        return wt_hamming(e.a) <= self.t_h and wt_hamming(e.b) <= self.t_h

    def transformed_check_matrix(self) -> BitMatrix:
        """``[H | L(H); 0 | H]``."""
        H = self.H
        zero = BitMatrix.zeros(H.n_rows, self.n)
        return vstack(hstack(H, H.map_rows(shift_left)), hstack(zero, H))

    def css_check_matrix(self) -> BitMatrix:
        """``[H | 0; 0 | H]``."""
        H = self.H
        zero = BitMatrix.zeros(H.n_rows, self.n)
        return vstack(hstack(H, zero), hstack(zero, H))

    def _check_syndromes(self, s: Syndromes) -> None:
        m = self.H.n_rows
        if s.s_a.length != m or s.s_b.length != m:
            raise ValueError(f"syndromes must have length {m}")


def syndrome_shift_map(H: BitMatrix) -> BitMatrix:
    """The matrix ``phi`` with ``H R(v) == phi (H v)`` for every ``v``.

    Column ``j`` is ``H R(v_j)`` for any witness ``v_j`` of ``H v_j = e_j``.
    Requires ``H`` to have full row rank and ``R`` to preserve its kernel.
    """
    m, n = H.n_rows, H.cols
    columns = []
    for j in range(m):
        v = solve(H, BitWord.unit(m, j))
        if v is None:
            raise ValueError("parity-check matrix is not full row rank")
        columns.append(mv_mul(H, shift_right(v)))
    return BitMatrix(tuple(columns), m).transpose() if m else BitMatrix((), 0)


def _hamming_table(H: BitMatrix, radius: int) -> dict[int, BitWord]:
    n = H.cols
    table: dict[int, BitWord] = {}
    for w in range(radius + 1):
        for positions in combinations(range(n), w):
            word = BitWord(n, sum(1 << p for p in positions))
            s = mv_mul(H, word).value
            if s in table:
                raise RuntimeError(f"coset leaders {table[s]} and {word} share syndrome; radius {radius} too large")
            table[s] = word
    return table


def build(C: CyclicCode, max_length: int = MAX_CSS_LENGTH) -> CssCode:
    """Compile the CSS code of a dual-containing cyclic code."""
    if not is_dual_containing(C):
        raise ValueError(f"{C} is not dual-containing (g does not divide the dual generator)")
    if C.n > max_length:
        raise ValueError(f"length {C.n} exceeds the table bound {max_length}")
    distances = min_distances(C)
    if distances is None:  # pragma: no cover - the zero code is never dual-containing
        raise ValueError("zero code has no CSS construction")
    t_h = (distances.d_h - 1) // 2
    t_p = (distances.d_sp - 1) // 2
    H = C.H
    phi = syndrome_shift_map(H)
    for row in C.G.rows:
        # phi is well defined iff R maps C into C
        if H.n_rows and mv_mul(H, shift_right(row)):
            raise RuntimeError(f"R(g-row {row}) leaves the code; syndrome shift map undefined")
    return CssCode(
        code=C,
        distances=distances,
        t_h=t_h,
        t_p=t_p,
        H=H,
        phi=phi,
        hamming_table=_hamming_table(H, t_h),
        sp_table=build_table(H, t_p),
    )


def rowspace_preserved(css: CssCode) -> bool:
    return rowspace_equal(css.transformed_check_matrix(), css.css_check_matrix())
