import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperdiag import signed
from hyperdiag.errors import CapExceeded, DuplicateAbs, OutOfRange, SizeMismatch, ZeroEntry
from hyperdiag.signed import SignedPermutation, compose, inverse, parse

from oracles import all_signed, fmaj_direct, fmaj_product_coeffs, inverse_direct


@st.composite
def signed_perms(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    perm = draw(st.permutations(list(range(1, n + 1))))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return SignedPermutation(tuple(s * p for s, p in zip(signs, perm)))


def P(text):
    return parse(text)


class TestParse:
    def test_running_example(self):
        beta = P("-2 -1 -5 4 3")
        assert beta.window == (-2, -1, -5, 4, 3)
        assert beta(3) == -5 and beta.sigma == (2, 1, 5, 4, 3)

    def test_identity(self):
        assert P("1 2 3") == SignedPermutation.identity(3)

    @pytest.mark.parametrize("text,exc", [("2 2 1", DuplicateAbs), ("1 0", ZeroEntry), ("1 3", OutOfRange), ("-2 2", DuplicateAbs)])
    def test_errors(self, text, exc):
        with pytest.raises(exc):
            P(text)

    def test_json_roundtrip(self):
        beta = P("-2 -1 -5 4 3")
        assert SignedPermutation.from_json(beta.to_json()) == beta


class TestGroup:
    def test_identity_neutral(self):
        beta = P("-2 -1 -5 4 3")
        e = SignedPermutation.identity(5)
        assert compose(e, beta) == beta == compose(beta, e)

    def test_inverse_axiom_b5_example(self):
        beta = P("-2 -1 -5 4 3")
        assert compose(beta, inverse(beta)) == SignedPermutation.identity(5)
        assert inverse(beta).window == inverse_direct(beta.window)

    def test_small_inverses(self):
        assert inverse(P("-1 2")) == P("-1 2")
        assert inverse(P("2 1")) == P("2 1")

    def test_b2_closure_and_table(self):
        elems = list(signed.enumerate_bn(2))
        table = {(a, b): compose(a, b) for a in elems for b in elems}
        assert set(table.values()) == set(elems)
        # every row and column of the Cayley table is a permutation of the group
        for a in elems:
            assert len({table[(a, b)] for b in elems}) == 8
            assert len({table[(b, a)] for b in elems}) == 8

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            compose(P("1 2"), P("1"))

    @given(signed_perms(), st.data())
    def test_associative(self, a, data):
        n = a.n
        b = data.draw(st.sampled_from(list(signed.enumerate_bn(n)) if n <= 3 else [a, inverse(a)]))
        c = inverse(a)
        assert compose(compose(a, b), c) == compose(a, compose(b, c))

    @given(signed_perms())
    def test_inverse_involution(self, beta):
        assert inverse(inverse(beta)) == beta
        assert compose(beta, inverse(beta)) == SignedPermutation.identity(beta.n)


class TestStats:
    def test_running_example(self):
        # the order -1 < -2 < ... < 0 < 1 < ... gives Des = {1, 4} and maj = 5,
        # so fmaj = 2*5 + 3 = 13
        s = signed.stats(P("-2 -1 -5 4 3"))
        assert s.des == {1, 4}
        assert s.maj == 5 and s.neg == 3
        assert s.fmaj == 13

    def test_identity(self):
        s = signed.stats(SignedPermutation.identity(4))
        assert s.des == frozenset() and s.fmaj == 0

    @pytest.mark.parametrize("n", range(1, 7))
    def test_fmaj_product_formula(self, n):
        coeffs = [0] * (n * n + 1)
        for beta in signed.enumerate_bn(n):
            coeffs[signed.fmaj(beta)] += 1
        assert coeffs == fmaj_product_coeffs(n)

    def test_b3_fmaj_distribution_frozen(self):
        # (1+q)(1+q+q^2+q^3)(1+...+q^5), expanded by hand
        expected = [1, 3, 5, 7, 8, 8, 7, 5, 3, 1]
        coeffs = [0] * 10
        for beta in signed.enumerate_bn(3):
            coeffs[signed.fmaj(beta)] += 1
        assert coeffs == expected

    @given(signed_perms())
    def test_fmaj_matches_definition(self, beta):
        s = signed.stats(beta)
        assert s.fmaj == 2 * s.maj + s.neg == fmaj_direct(beta.window)
        assert s.des | s.ris == frozenset(range(1, beta.n)) and not (s.des & s.ris)


class TestLocalVectors:
    def test_known_values(self):
        assert signed.local_vectors(P("2 1")).g == (1, 3)
        lv = signed.local_vectors(P("-1 2"))
        assert lv.g == (0, 1) and lv.mu == (0, 1)
        assert signed.local_vectors(P("-1 -2")).g == (0, 0)

    @given(signed_perms())
    def test_invariants(self, beta):
        lv = signed.local_vectors(beta)
        assert sum(lv.f) == signed.fmaj(beta)
        assert all(lv.g[i] <= lv.g[i + 1] for i in range(beta.n - 1))
        assert all(e + h == 1 for e, h in zip(lv.eps, lv.eta))
        assert all(f == 2 * d + e for f, d, e in zip(lv.f, lv.d, lv.eps))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_g_weight_is_fmaj_of_circ(self, n):
        for beta in signed.enumerate_bn(n):
            assert sum(signed.g_vector(beta)) == signed.fmaj(signed.circ_involution(beta))
            binv = inverse(beta)
            assert sum(signed.g_tilde(beta)) == signed.fmaj(signed.circ_involution(binv))


class TestCirc:
    def test_identity_b2(self):
        assert signed.circ_involution(SignedPermutation.identity(2)) == P("-1 -2")

    def test_involution_b3(self):
        for beta in signed.enumerate_bn(3):
            assert signed.circ_involution(signed.circ_involution(beta)) == beta

    @pytest.mark.parametrize("n", range(1, 5))
    def test_reverses_local_statistics(self, n):
        for beta in signed.enumerate_bn(n):
            lv = signed.local_vectors(beta)
            lc = signed.local_vectors(signed.circ_involution(beta))
            for i in range(n):
                assert lv.delta[i] == lc.d[n - 1 - i]
                assert lv.eta[i] == lc.eps[n - 1 - i]


class TestCyclesAndSign:
    def test_trivial_types(self):
        assert signed.signed_cycle_type(SignedPermutation.identity(3)) == ((1, 1, 1), ())
        assert signed.signed_cycle_type(P("-1")) == ((), (1,))

    def test_class_sizes_b3(self):
        from collections import Counter

        sizes = Counter(signed.signed_cycle_type(b) for b in signed.enumerate_bn(3))
        assert sum(sizes.values()) == 48
        assert all(sum(mu) + sum(nu) == 3 for mu, nu in sizes)
        assert len(sizes) == 10

    def test_sign_values(self):
        assert signed.sign(SignedPermutation.identity(3)) == 1
        assert signed.sign(P("-1")) == -1

    def test_sign_multiplicative_b2(self):
        elems = list(signed.enumerate_bn(2))
        for a, b in itertools.product(elems, elems):
            assert signed.sign(compose(a, b)) == signed.sign(a) * signed.sign(b)

    def test_cycle_type_is_class_function(self):
        rng = random.Random(0)
        for n in range(1, 5):
            elems = list(signed.enumerate_bn(n))
            for _ in range(50):
                a, g = rng.choice(elems), rng.choice(elems)
                conj = compose(compose(g, a), inverse(g))
                assert signed.signed_cycle_type(conj) == signed.signed_cycle_type(a)


class TestEnumerate:
    @pytest.mark.parametrize("n,count", [(1, 2), (2, 8), (4, 384)])
    def test_counts(self, n, count):
        elems = list(signed.enumerate_bn(n))
        assert len(elems) == len(set(elems)) == count

    def test_matches_oracle_set(self):
        assert {b.window for b in signed.enumerate_bn(3)} == set(all_signed(3))

    def test_order_is_perm_then_mask(self):
        assert [b.window for b in signed.enumerate_bn(1)] == [(1,), (-1,)]
        assert [b.window for b in signed.enumerate_bn(2)][:4] == [(1, 2), (1, -2), (-1, 2), (-1, -2)]

    def test_cap(self):
        with pytest.raises(CapExceeded):
            list(signed.enumerate_bn(8))
        with pytest.raises(CapExceeded):
            next(signed.enumerate_bn(3, cap=2))


class TestDescentBasis:
    def test_identity(self):
        assert signed.descent_basis_exponents(SignedPermutation.identity(3)) == (0, 0, 0)

    def test_running_example_degree(self):
        beta = P("-2 -1 -5 4 3")
        assert sum(signed.descent_basis_exponents(beta)) == signed.fmaj(beta)

    def test_b2_degree_polynomial(self):
        coeffs = [0] * 5
        for beta in signed.enumerate_bn(2):
            coeffs[sum(signed.descent_basis_exponents(beta))] += 1
        assert coeffs == [1, 2, 2, 2, 1]

    def test_monomials_distinct(self):
        for n in range(1, 5):
            exps = [signed.descent_basis_exponents(b) for b in signed.enumerate_bn(n)]
            assert len(set(exps)) == len(exps)
