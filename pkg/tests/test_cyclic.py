from math import ceil

import pytest

from spcss.cyclic import (
    Gf2Poly,
    check_structure,
    contains,
    dual,
    enumerate_cyclic_codes,
    format_code_spec,
    from_generator,
    irreducible_factors,
    is_dual_containing,
    min_distances,
    parse_code_spec,
    poly_divmod,
)
from spcss.gf2 import BitWord, mv_mul
from spcss.metrics import shift

from .oracles import codewords_oracle, poly_mul_oracle, sp_weight_oracle

P = Gf2Poly.from_str
X7_1 = P("10000001")


def distances_oracle(C):
    words = [w for w in codewords_oracle([str(r) for r in C.G.rows]) if "1" in w]
    return min(w.count("1") for w in words), min(sp_weight_oracle(w) for w in words)


class TestPolyDivmod:
    def test_divide_by_one(self):
        a = P("1011001")
        assert poly_divmod(a, Gf2Poly(1)) == (a, Gf2Poly(0))

    def test_generator_divides(self):
        assert poly_divmod(X7_1, P("1101"))[1].is_zero()

    def test_dual_generator_quotient(self):
        # 1+x^2+x^3+x^4 = (1+x)(1+x+x^3), so the cofactor in x^7-1 is 1+x^2+x^3
        assert poly_mul_oracle([1, 0, 1, 1, 1], [1, 0, 1, 1]) == [1, 0, 0, 0, 0, 0, 0, 1]
        assert poly_mul_oracle([1, 1], [1, 1, 0, 1]) == [1, 0, 1, 1, 1]
        q, r = poly_divmod(X7_1, P("10111"))
        assert r.is_zero() and q == P("1011")

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            poly_divmod(X7_1, Gf2Poly(0))

    def test_reconstructs_dividend(self):
        for a in range(1, 300):
            for b in range(1, 40):
                q, r = poly_divmod(Gf2Poly(a), Gf2Poly(b))
                assert q * Gf2Poly(b) + r == Gf2Poly(a)
                assert r.degree < Gf2Poly(b).degree

    def test_zero_degree_sentinel(self):
        assert Gf2Poly(0).degree == -1
        assert str(P("1101")) == "1+x+x^3"


class TestFromGenerator:
    def test_c7(self, c7):
        assert c7.k == 4
        assert c7.dual_gen == P("10111")
        assert [str(r) for r in c7.H.rows] == ["1011100", "0111001", "1110010"]
        assert [str(r) for r in c7.G.rows] == ["1101000", "0110100", "0011010", "0001101"]
        assert check_structure(c7) == []

    def test_full_space(self):
        C = from_generator(7, Gf2Poly(1))
        assert C.k == 7 and C.H.n_rows == 0

    def test_even_weight(self):
        C = from_generator(7, P("11"))
        h, _ = poly_divmod(X7_1, P("11"))
        assert h == P("1111111")
        assert C.k == 6 and C.dual_gen == P("1111111")
        assert [str(r) for r in C.H.rows] == ["1111111"]

    def test_non_divisor_reports_remainder(self):
        with pytest.raises(ValueError, match="remainder"):
            from_generator(7, P("111"))

    def test_rows_of_H_are_shifts_and_dual_codewords(self):
        for n in (7, 9, 15):
            for C in enumerate_cyclic_codes(n):
                assert check_structure(C) == []
                if C.k in (0, n) or n - C.k > 12:
                    continue
                D = dual(C)
                dual_words = codewords_oracle([str(r) for r in D.G.rows])
                c = BitWord(n, C.dual_gen.coeffs)
                for row in C.H.rows:
                    assert row == c
                    assert str(row) in dual_words
                    c = shift(c, "left")


class TestDual:
    def test_full_space_dual_is_zero_code(self):
        assert dual(from_generator(5, Gf2Poly(1))).k == 0

    def test_c7_dual(self, c7):
        D = dual(c7)
        assert D.k == 3 and D.g == P("10111")
        for u in codewords_oracle([str(r) for r in D.G.rows]):
            assert contains(c7, BitWord.from_str(u))
            for v in codewords_oracle([str(r) for r in c7.G.rows]):
                assert sum(int(a) & int(b) for a, b in zip(u, v)) % 2 == 0

    def test_double_dual(self, c7):
        DD = dual(dual(c7))
        assert codewords_oracle([str(r) for r in DD.G.rows]) == codewords_oracle([str(r) for r in c7.G.rows])


class TestDualContaining:
    def test_c7(self, c7):
        assert is_dual_containing(c7)

    def test_full_space(self):
        assert is_dual_containing(from_generator(7, Gf2Poly(1)))

    def test_even_weight_code_is_not(self):
        C = from_generator(7, P("11"))
        assert "1111111" not in codewords_oracle([str(r) for r in C.G.rows])
        assert not is_dual_containing(C)

    def test_matches_membership_oracle(self):
        for n in (7, 9, 15):
            for C in enumerate_cyclic_codes(n):
                if C.k == 0:
                    continue
                dual_basis = [str(r) for r in C.H.rows]
                inside = all(not mv_mul(C.H, BitWord.from_str(w)) for w in dual_basis)
                assert is_dual_containing(C) == inside


class TestEnumerate:
    def test_n7_factorization(self):
        assert irreducible_factors(7) == [P("11"), P("1101"), P("1011")]

    def test_n7(self):
        codes = enumerate_cyclic_codes(7)
        assert len(codes) == 8
        flagged = {c.g: c.dual_containing for c in codes}
        assert flagged[P("1101")] is True

    def test_n1(self):
        assert [c.k for c in enumerate_cyclic_codes(1)] == [1, 0]

    def test_even_rejected(self):
        with pytest.raises(ValueError):
            enumerate_cyclic_codes(8)

    def test_bound(self):
        with pytest.raises(ValueError):
            enumerate_cyclic_codes(33)

    @pytest.mark.parametrize("n", [3, 5, 9, 15, 21, 31])
    def test_divisors_by_remultiplication(self, n):
        factors = irreducible_factors(n)
        prod = Gf2Poly(1)
        for f in factors:
            prod = prod * f
        assert prod == Gf2Poly((1 << n) | 1)
        assert len(enumerate_cyclic_codes(n)) == 2 ** len(factors)


class TestMinDistances:
    def test_c7(self, c7):
        assert min_distances(c7) == (3, 5)

    @pytest.mark.parametrize("n", [3, 5, 7, 9])
    def test_repetition(self, n):
        g = poly_divmod(Gf2Poly((1 << n) | 1), P("11"))[0]
        C = from_generator(n, g)
        assert C.k == 1 and min_distances(C) == (n, n)

    def test_even_weight(self):
        C = from_generator(7, P("11"))
        assert distances_oracle(C) == (2, 3)
        assert min_distances(C) == (2, 3)

    def test_zero_code(self):
        assert min_distances(from_generator(7, X7_1)) is None

    def test_matches_oracle_all_small_codes(self):
        for n in (7, 9):
            for C in enumerate_cyclic_codes(n):
                if C.k:
                    assert min_distances(C) == distances_oracle(C)

    def test_distance_bounds_over_enumerated_codes(self):
        checked = 0
        for n in (7, 9, 15):
            for C in enumerate_cyclic_codes(n):
                if C.k == 0:
                    continue
                d_h, d_sp = min_distances(C)
                if d_h < n:
                    assert d_h + 1 <= d_sp <= 2 * d_h
                if 2 <= C.k <= n - 1 and d_h < n:
                    assert d_sp >= ceil(3 * d_h / 2)
                    checked += 1
        assert checked > 0

    def test_sp_distance_bound_fails_for_repetition(self):
        g = poly_divmod(X7_1, P("11"))[0]
        d_h, d_sp = min_distances(from_generator(7, g))
        assert d_sp < 3 * d_h / 2


class TestCodeSpec:
    def test_round_trip(self):
        for C in enumerate_cyclic_codes(15):
            assert parse_code_spec(format_code_spec(C)) == C

    @pytest.mark.parametrize(
        "text, token",
        [("n=7 g=11x1", "g=11x1"), ("n=seven g=1101", "n=seven"), ("n=7 h=1101", "h=1101"), ("n=7", "g=")],
    )
    def test_errors_name_the_token(self, text, token):
        with pytest.raises(ValueError, match=token):
            parse_code_spec(text)
