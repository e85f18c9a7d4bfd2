import random
from fractions import Fraction
from math import factorial

import pytest

from hyperdiag.errors import LevelMismatch, NotPolynomial, SizeMismatch
from hyperdiag.series import QTSeries, product_one_minus
from hyperdiag.symfunc import (
    Alphabet,
    SymExpansion,
    alphabet_power,
    bipartitions,
    conjugate,
    e_of_alphabet,
    h_of_alphabet,
    hook_dimension,
    internal_product,
    mn_character,
    neutral_element,
    omega_of_alphabet,
    partitions,
    schur_of_alphabet,
    z_mu,
)

from oracles import hook_count_syt

N = 14


def geo(num, dens, trunc=N):
    return Alphabet.rational(num, dens, trunc)


def random_alphabet(rng, trunc=N):
    num = {(rng.randrange(3), rng.randrange(3)): rng.randint(1, 2) for _ in range(2)}
    num.pop((0, 0), None)
    if not num:
        num = {(1, 0): 1}
    dens = [(a, b) for a, b in [(rng.randint(1, 3), 0), (0, rng.randint(1, 3))]]
    return geo(num, dens[: rng.randint(0, 2)], trunc)


class TestPartitions:
    def test_counts(self):
        assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]

    def test_conjugate_involution(self):
        for n in range(8):
            for lam in partitions(n):
                assert conjugate(conjugate(lam)) == lam

    def test_z(self):
        assert z_mu((1, 1, 1)) == 6
        assert z_mu((2, 1)) == 2
        for n in range(1, 7):
            assert sum(Fraction(factorial(n), z_mu(mu)) for mu in partitions(n)) == factorial(n)

    def test_hook_dimension(self):
        for n in range(1, 8):
            for lam in partitions(n):
                assert hook_dimension(lam) == hook_count_syt(lam)

    def test_bipartitions_n2(self):
        assert len(bipartitions(2)) == 5
        assert len(bipartitions(3)) == 10
        assert len(bipartitions(4)) == 20


class TestCharacters:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_trivial_and_sign(self, n):
        for mu in partitions(n):
            assert mn_character((n,), mu) == 1
            assert mn_character((1,) * n, mu) == (-1) ** (n - len(mu))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_dimension(self, n):
        for lam in partitions(n):
            assert mn_character(lam, (1,) * n) == hook_dimension(lam)

    def test_row_orthonormal_n4(self):
        for lam in partitions(4):
            assert sum(Fraction(mn_character(lam, mu) ** 2, z_mu(mu)) for mu in partitions(4)) == 1

    @pytest.mark.parametrize("n", range(1, 6))
    def test_column_orthogonality(self, n):
        for mu in partitions(n):
            for nu in partitions(n):
                s = sum(mn_character(lam, mu) * mn_character(lam, nu) for lam in partitions(n))
                assert s == (z_mu(mu) if mu == nu else 0)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            mn_character((2,), (1,))

    def test_known_value(self):
        # chi^{(2,1)} on a 3-cycle is -1
        assert mn_character((2, 1), (3,)) == -1
        assert mn_character((2, 2), (2, 2)) == 2


class TestPlethysm:
    def test_alphabet_power(self):
        A = geo({(0, 0): 1}, [(1, 0)])
        assert alphabet_power(A, 2).series == QTSeries.geometric(2, 0, N)
        B = geo({(0, 0): 1, (1, 1): 1}, [(2, 0), (0, 2)])
        assert alphabet_power(B, 1).series == B.series

    def test_alphabet_power_odd(self):
        A = geo({(1, 0): 1}, [(2, 0)])
        expected = QTSeries({(3 + 6 * k, 0): 1 for k in range(N)}, N)
        assert alphabet_power(A, 3).series == expected

    def test_h1_is_identity(self):
        A = geo({(0, 0): 1, (1, 1): 1}, [(2, 0), (0, 2)])
        assert h_of_alphabet(1, A) == A.series
        assert e_of_alphabet(1, A) == A.series
        cleared = h_of_alphabet(1, A) * QTSeries({(0, 0): 1, (2, 0): -1}) * QTSeries({(0, 0): 1, (0, 2): -1})
        assert cleared.certify_polynomial(1) == QTSeries({(0, 0): 1, (1, 1): 1})

    def test_h0(self):
        A = geo({(1, 0): 1}, [(1, 0)])
        assert h_of_alphabet(0, A) == QTSeries.one(N)

    def test_h2_principal_specialisation(self):
        # h_2[1/(1-q)] counts partitions with at most 2 parts: floor(k/2) + 1
        A = geo({(0, 0): 1}, [(1, 0)])
        h2 = h_of_alphabet(2, A)
        assert [h2[k] for k in range(N + 1)] == [k // 2 + 1 for k in range(N + 1)]

    def test_e_single_monomial_vanishes(self):
        A = Alphabet(QTSeries({(2, 1): 1}, N))
        for n in range(2, 5):
            assert e_of_alphabet(n, A).is_zero()

    def test_e2_odd_alphabet_polynomial_nonneg(self):
        B = geo({(1, 0): 1, (0, 1): 1}, [(2, 0), (0, 2)])
        # clearing with (1-q^2)^2 (1-t^2)^2 leaves an infinite tail; the
        # invariant-degree product (1-q^2)(1-q^4)(1-t^2)(1-t^4) is what works
        den = product_one_minus(2) * product_one_minus(2, variable="t")
        p = (e_of_alphabet(2, B) * den.truncate(N)).certify_polynomial(4)
        assert p.is_nonneg_integral()
        assert p.evaluate(1, 1) == 8
        square = product_one_minus(1) * product_one_minus(1, variable="t")
        with pytest.raises(NotPolynomial):
            (e_of_alphabet(2, B) * (square * square).truncate(N)).certify_polynomial(6)

    def test_hn_additivity(self):
        rng = random.Random(3)
        for _ in range(5):
            A, B = random_alphabet(rng), random_alphabet(rng)
            AB = A + B
            for n in range(5):
                rhs = QTSeries.zero(N)
                for k in range(n + 1):
                    rhs = rhs + h_of_alphabet(k, A) * h_of_alphabet(n - k, B)
                assert h_of_alphabet(n, AB) == rhs

    def test_omega_multiplicative(self):
        rng = random.Random(4)
        for _ in range(3):
            A, B = random_alphabet(rng, 8), random_alphabet(rng, 8)
            lhs = omega_of_alphabet(A + B, 8)
            rhs = omega_of_alphabet(A, 8) * omega_of_alphabet(B, 8)
            # agree in every monomial of total degree <= 8; both sides only
            # receive contributions from h_k with k <= total degree
            for (i, j), v in (lhs - rhs).items():
                assert i + j > 8, (i, j, v)

    def test_schur_extremes(self):
        A = geo({(1, 0): 1, (0, 1): 1}, [(2, 0)])
        for n in range(1, 5):
            assert schur_of_alphabet((n,), A) == h_of_alphabet(n, A)
            assert schur_of_alphabet((1,) * n, A) == e_of_alphabet(n, A)
        X = geo({(0, 0): 1}, [(2, 0)])
        assert schur_of_alphabet((1,), X) == X.series

    def test_cauchy_n2(self):
        rng = random.Random(7)
        for _ in range(3):
            A, B = random_alphabet(rng, 10), random_alphabet(rng, 10)
            lhs = sum((schur_of_alphabet(l, A) * schur_of_alphabet(l, B) for l in partitions(2)), QTSeries.zero(10))
            assert lhs == h_of_alphabet(2, A * B)


class TestSymExpansion:
    def test_internal_product_example(self):
        p = SymExpansion.p((2,), (1,))
        assert internal_product(p, p) == SymExpansion.p((2,), (1,), 2)
        assert internal_product(SymExpansion.p((3,), ()), SymExpansion.p((2, 1), ())) == SymExpansion({}, 3)

    def test_neutral(self):
        for n in range(1, 4):
            u = SymExpansion({k: i + 1 for i, k in enumerate(bipartitions(n))})
            assert internal_product(neutral_element(n), u) == u

    def test_level_mismatch(self):
        with pytest.raises(LevelMismatch):
            internal_product(SymExpansion.p((1,), ()), SymExpansion.p((2,), ()))
        with pytest.raises(LevelMismatch):
            SymExpansion({((1,), ()): 1, ((2,), ()): 1})

    def test_product_merges_parts(self):
        a = SymExpansion.p((2,), (1,))
        b = SymExpansion.p((1,), ())
        assert a * b == SymExpansion.p((2, 1), (1,))
