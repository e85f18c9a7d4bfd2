import itertools
from fractions import Fraction
from math import comb

import pytest

from hyperdiag import frobenius as fr
from hyperdiag import signed
from hyperdiag.errors import IdentityFailed, SizeMismatch
from hyperdiag.series import QTSeries
from hyperdiag.symfunc import bipartitions, h_of_alphabet, hook_dimension, scalar_product

from oracles import fmaj_product_coeffs


def L(lam, rho):
    return fr.IrrLabel(tuple(lam), tuple(rho))


class TestClasses:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_class_sizes_match_enumeration(self, n):
        counted = fr.class_sizes_by_enumeration(n)
        for c in fr.class_types(n):
            assert c.size() == counted[(c.positive, c.negative)]
        assert sum(c.size() for c in fr.class_types(n)) == signed.order(n)

    def test_label_strings(self):
        assert str(L((1, 1), (1,))) == "(11,1)"
        assert str(L((), (3,))) == "(0,3)"


class TestCharacters:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_orthonormality(self, n):
        order = signed.order(n)
        classes = fr.class_types(n)
        labels = fr.irr_labels(n)
        for a, b in itertools.combinations_with_replacement(labels, 2):
            s = sum(c.size() * fr.character_value(a, c) * fr.character_value(b, c) for c in classes)
            assert Fraction(s, order) == (1 if a == b else 0)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_identity_class_gives_dimension(self, n):
        ident = fr.BClassType((1,) * n, ())
        for lab in fr.irr_labels(n):
            assert fr.character_value(lab, ident) == lab.dimension()
        assert sum(lab.dimension() ** 2 for lab in fr.irr_labels(n)) == signed.order(n)

    def test_sign_character_n2(self):
        # (0,11) is the sign character: value sign(beta) on every class
        lab = L((), (1, 1))
        for beta in signed.enumerate_bn(2):
            mu, nu = signed.signed_cycle_type(beta)
            assert fr.character_value(lab, fr.BClassType(mu, nu)) == signed.sign(beta)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_regular(self, n):
        assert all(r.ok for r in fr.verify_regular(n))

    def test_scalar_product_symmetric(self):
        a, b = fr.irreducible_expansion(L((2,), (1,))), fr.irreducible_expansion(L((1,), (1, 1)))
        assert scalar_product(a, b) == scalar_product(b, a) == 0


class TestGraded:
    def test_table3_exact(self):
        assert all(r.ok for r in fr.verify_table3())
        assert fr.mult_graded(L((1, 1), (1,))) == QTSeries({(7, 0): 1, (5, 0): 1, (3, 0): 1})

    @pytest.mark.parametrize("n", range(1, 5))
    def test_graded_regular_sum(self, n):
        # sum over irreducibles of dim * m(q) is the Hilbert series of the coinvariant space
        total = QTSeries.zero()
        for lab in fr.irr_labels(n):
            total = total + fr.mult_graded(lab).scale(lab.dimension())
        assert [total[k] for k in range(n * n + 1)] == fmaj_product_coeffs(n)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_trivial_is_one(self, n):
        assert fr.mult_graded(L((n,), ())) == QTSeries.one(None)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_graded_matches_characteristic(self, n):
        F = fr.frob_graded_harmonics(n)
        for lab in fr.irr_labels(n):
            m = fr.multiplicity(F, lab)
            assert m.truncate(n * n) == fr.mult_graded(lab).truncate(n * n)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_flip(self, n):
        assert all(r.ok for r in fr.verify_flip_symmetry(n, raise_on_failure=True))

    def test_flip_raises_on_corruption(self, monkeypatch):
        real = fr.mult_graded

        def broken(label, n=None, trunc=None):
            out = real(label, n, trunc)
            return out + QTSeries.one(None) if label == L((2,), ()) else out

        monkeypatch.setattr(fr, "mult_graded", broken)
        with pytest.raises(IdentityFailed):
            fr.verify_flip_symmetry(2, raise_on_failure=True)

    def test_level_mismatch(self):
        with pytest.raises(SizeMismatch):
            fr.mult_graded(L((2,), ()), 3)


def ediagram_bidegree_counts(n, bound):
    """Count multisets of n even cells by weight, only for weights <= bound."""
    cells = [(a, b) for a in range(bound + 1) for b in range(bound + 1) if (a + b) % 2 == 0]
    out = {}
    for combo in itertools.combinations_with_replacement(cells, n):
        A = sum(c[0] for c in combo)
        B = sum(c[1] for c in combo)
        if A <= bound and B <= bound:
            out[(A, B)] = out.get((A, B), 0) + 1
    return out


class TestBigraded:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_genfunction(self, n):
        assert fr.verify_genfunction(n).ok

    @pytest.mark.parametrize("n", range(1, 5))
    def test_ogenfunction(self, n):
        assert fr.verify_ogenfunction(n).ok

    @pytest.mark.parametrize("n", range(1, 6))
    def test_corollary(self, n):
        assert fr.verify_corollary(n).ok

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_invariant_series_counts_ediagrams(self, n):
        bound = 6
        series = h_of_alphabet(n, fr.alphabet_diag_even(bound))
        counts = ediagram_bidegree_counts(n, bound)
        for A in range(bound + 1):
            for B in range(bound + 1):
                assert series.coefficient(A, B) == counts.get((A, B), 0)

    def test_alt_hilbert_small(self):
        assert fr.alt_hilbert(1) == QTSeries({(1, 0): 1, (0, 1): 1})
        assert fr.trivial_hilbert(1) == QTSeries({(0, 0): 1, (1, 1): 1})

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_dimensions_at_one(self, n):
        for lab in fr.irr_labels(n):
            expected = signed.order(n) * comb(n, sum(lab.lam)) * hook_dimension(lab.lam) * hook_dimension(lab.rho)
            assert fr.mult_bigraded(lab).evaluate(1, 1) == expected

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_t0_bridge(self, n):
        assert all(r.ok for r in fr.verify_t0_bridge(n))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_bigraded_symmetric_in_q_t(self, n):
        for lab in fr.irr_labels(n):
            m = fr.mult_bigraded(lab)
            assert m == m.swap()


class TestPsi:
    @pytest.mark.parametrize("n", [1, 2])
    def test_exhaustive(self, n):
        for lam, mu in bipartitions(n):
            assert fr.verify_psi_positivity(lam, mu, n).ok

    def test_n3_sample(self):
        for lam, mu in [((3,), ()), ((2,), (1,)), ((1,), (1, 1)), ((), (2, 1))]:
            assert fr.verify_psi_positivity(lam, mu, 3).ok

    def test_trivial_psi_n1(self):
        assert fr.psi_polynomial((1,), (), 1) == QTSeries({(0, 0): 1, (1, 1): 1})

    def test_size_check(self):
        with pytest.raises(SizeMismatch):
            fr.psi_polynomial((), (), 1)


class TestFmaj:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_product_formula(self, n):
        total = fr.fmaj_sum(n)
        assert [total[k] for k in range(n * n + 1)] == fmaj_product_coeffs(n)
        assert fr.fmaj_product(n) == total

    def test_report_json(self):
        rep = fr.compare("x", 1, QTSeries({(1, 0): 1}), QTSeries({(1, 0): 2}))
        assert rep.to_json() == {
            "identity": "x",
            "n": 1,
            "status": "FAIL",
            "first_discrepancy": {"q_exp": 1, "t_exp": 0, "lhs": "1", "rhs": "2"},
        }
