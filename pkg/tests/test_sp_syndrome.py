from itertools import combinations, product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spcss.gf2 import BitWord
from spcss.metrics import PairWord, pair_read, wt_pair
from spcss.sp_syndrome import (
    SpSyndrome,
    TableCollisionError,
    build_table,
    classical_pair_decode,
    count_pair_errors,
    pair_syndromes,
    sp_decode,
)

from .oracles import STEANE_H_ROWS, bw, codewords_oracle, dot_oracle


def left_rot(s: str) -> str:
    return s[1:] + s[0]


def syndrome_oracle(left: str, right: str):
    sp = tuple((dot_oracle(h, left), dot_oracle(left_rot(h), right)) for h in STEANE_H_ROWS)
    n = len(left)
    sn = "".join(str((int(left[i]) + int(right[i - 1])) % 2) for i in range(n))
    return sp, sn


def all_pair_words(n, radius):
    for w in range(radius + 1):
        for pos in combinations(range(n), w):
            for choice in product(((1, 0), (0, 1), (1, 1)), repeat=w):
                l = ["0"] * n
                r = ["0"] * n
                for p, (a, b) in zip(pos, choice):
                    l[p], r[p] = str(a), str(b)
                yield "".join(l), "".join(r)


def test_zero(steane_H):
    s = pair_syndromes(PairWord.zeros(7), steane_H)
    assert s.sp == ((0, 0),) * 3 and str(s.sn) == "0000000" and s.is_zero()


def test_worked_example_pair_error(steane_H):
    assert syndrome_oracle("0100000", "1100000") == (((0, 1), (1, 0), (1, 0)), "0010000")
    s = pair_syndromes(PairWord(bw("0100000"), bw("1100000")), steane_H)
    assert s.sp == ((0, 1), (1, 0), (1, 0))
    assert str(s.sn) == "0010000"


def test_codeword_reads_have_zero_syndrome(steane_H, c7):
    assert pair_syndromes(pair_read(bw("1101000")), steane_H).is_zero()
    for c in codewords_oracle([str(r) for r in c7.G.rows]):
        assert pair_syndromes(pair_read(bw(c)), steane_H).is_zero()


def test_matches_oracle_on_radius_two(steane_H):
    for l, r in all_pair_words(7, 2):
        s = pair_syndromes(PairWord(bw(l), bw(r)), steane_H)
        sp, sn = syndrome_oracle(l, r)
        assert s.sp == sp and str(s.sn) == sn


def test_dimension_mismatch(steane_H):
    with pytest.raises(ValueError):
        pair_syndromes(PairWord.zeros(5), steane_H)


pair_words7 = st.tuples(st.integers(0, 127), st.integers(0, 127)).map(
    lambda t: PairWord(BitWord(7, t[0]), BitWord(7, t[1]))
)


@given(pair_words7, pair_words7)
def test_linear(steane_H, u, v):
    su, sv, suv = (pair_syndromes(w, steane_H) for w in (u, v, u + v))
    assert suv.sp_left == su.sp_left + sv.sp_left
    assert suv.sp_right == su.sp_right + sv.sp_right
    assert suv.sn == su.sn + sv.sn


class TestBuildTable:
    def test_steane_radius_two(self, steane_H):
        expected = 1 + 7 * 3 + comb(7, 2) * 9
        assert expected == 211 == count_pair_errors(7, 2)
        table = build_table(steane_H, 2)
        assert len(table) == 211
        assert all(wt_pair(u) <= 2 for u in table.entries.values())

    def test_injective_by_oracle(self):
        keys = {syndrome_oracle(l, r) for l, r in all_pair_words(7, 2)}
        assert len(keys) == 211

    def test_radius_zero(self, steane_H):
        table = build_table(steane_H, 0)
        assert list(table.entries.values()) == [PairWord.zeros(7)]

    def test_radius_three_collides(self, steane_H):
        keys = {}
        collided = False
        for l, r in all_pair_words(7, 3):
            k = syndrome_oracle(l, r)
            collided |= k in keys
            keys.setdefault(k, (l, r))
        assert collided
        with pytest.raises(TableCollisionError) as info:
            build_table(steane_H, 3)
        assert len(info.value.collisions) >= 1
        u, v = info.value.collisions[0]
        assert pair_syndromes(u, steane_H) == pair_syndromes(v, steane_H)

    def test_entry_limit(self, steane_H):
        with pytest.raises(ValueError):
            build_table(steane_H, 2, max_entries=10)


class TestSpDecode:
    def test_round_trip(self, steane_H):
        table = build_table(steane_H, 2)
        for l, r in all_pair_words(7, 2):
            u = PairWord(bw(l), bw(r))
            assert sp_decode(table, pair_syndromes(u, steane_H)) == u

    def test_zero_and_example(self, steane_H):
        table = build_table(steane_H, 2)
        zero = pair_syndromes(PairWord.zeros(7), steane_H)
        assert sp_decode(table, zero) == PairWord.zeros(7)
        s = SpSyndrome(bw("011"), bw("100"), bw("0010000"))
        assert s.sp == ((0, 1), (1, 0), (1, 0))
        assert sp_decode(table, s) == PairWord(bw("0100000"), bw("1100000"))

    def test_miss(self, steane_H):
        table = build_table(steane_H, 2)
        keys = set(table.entries)
        misses = [
            SpSyndrome(BitWord(3, a), BitWord(3, b), BitWord(7, c))
            for a in range(8) for b in range(8) for c in range(128)
            if SpSyndrome(BitWord(3, a), BitWord(3, b), BitWord(7, c)).key() not in keys
        ]
        assert len(misses) == 2**13 - 211
        assert all(sp_decode(table, s) is None for s in misses[:200])

    def test_key_layout(self):
        s = SpSyndrome(bw("10"), bw("01"), bw("001"))
        # pairs (1,0),(0,1) flatten to 1,0,0,1 then sn 0,0,1
        assert s.key() == 0b1001001


class TestClassicalPairDecode:
    def test_clean_read(self, steane_H):
        table = build_table(steane_H, 2)
        assert classical_pair_decode(pair_read(bw("1101000")), table, steane_H) == bw("1101000")

    def test_one_pair_error(self, steane_H):
        table = build_table(steane_H, 2)
        y = pair_read(bw("1101000"))
        corrupted = PairWord.from_pairs([(1, 1) if i == 2 else p for i, p in enumerate(y.pairs)])
        assert wt_pair(corrupted - y) == 1
        assert classical_pair_decode(corrupted, table, steane_H) == bw("1101000")

    def test_every_correctable_corruption_of_every_codeword(self, steane_H, c7):
        table = build_table(steane_H, 2)
        for c in codewords_oracle([str(r) for r in c7.G.rows]):
            y = pair_read(bw(c))
            for l, r in all_pair_words(7, 2):
                assert classical_pair_decode(y + PairWord(bw(l), bw(r)), table) == bw(c)

    def test_beyond_radius(self, steane_H, c7):
        table = build_table(steane_H, 2)
        code = codewords_oracle([str(r) for r in c7.G.rows])
        y = PairWord.from_pairs([(1, 1), (1, 0), (0, 1)] + [(0, 0)] * 4)
        out = classical_pair_decode(y, table)
        assert out is None or (str(out) in code and out != BitWord(7))
