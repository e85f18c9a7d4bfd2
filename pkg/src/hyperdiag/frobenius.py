"""Type-B Frobenius characteristics and the graded/bigraded multiplicities of
the irreducible B_n-modules in the (diagonal) coinvariant spaces.

Irreducibles are indexed by pairs (lam, rho) with |lam| + |rho| = n and sent
to s_lam[z + zbar] s_rho[z - zbar].  Conjugacy classes are indexed by signed
cycle types (mu, nu): mu lists positive cycles, nu negative ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import signed
from .errors import DivisionInexact, IdentityFailed, NegativeCoefficient, SizeMismatch
from .series import QTSeries, product_one_minus, q_binomial
from .symfunc import (
    Alphabet,
    SymExpansion,
    bipartitions,
    conjugate,
    e_of_alphabet,
    h_of_alphabet,
    hook_dimension,
    mn_character,
    p_minus,
    p_plus,
    partitions,
    scalar_product,
    schur_of_alphabet,
    z_mu,
)

# m_{lam,rho}(q) for n = 3; keys are (lam, rho), values list the exponents of q
# (all coefficients 1).
N3_TABLE = {
    ((3,), ()): (0,),
    ((2, 1), ()): (2, 4),
    ((1, 1, 1), ()): (6,),
    ((2,), (1,)): (1, 3, 5),
    ((1, 1), (1,)): (3, 5, 7),
    ((), (1, 1, 1)): (9,),
    ((), (2, 1)): (5, 7),
    ((), (3,)): (3,),
    ((1,), (1, 1)): (4, 6, 8),
    ((1,), (2,)): (2, 4, 6),
}


def default_trunc(n: int) -> int:
    return 2 * n * n


@dataclass(frozen=True)
class BClassType:
    positive: tuple
    negative: tuple

    @property
    def level(self):
        return sum(self.positive) + sum(self.negative)

    def size(self) -> int:
        mu, nu = self.positive, self.negative
        n = self.level
        return 2 ** n * math.factorial(n) // (z_mu(mu) * z_mu(nu) * 2 ** (len(mu) + len(nu)))


@dataclass(frozen=True)
class IrrLabel:
    lam: tuple
    rho: tuple

    @property
    def level(self):
        return sum(self.lam) + sum(self.rho)

    def dimension(self) -> int:
        n = self.level
        return math.comb(n, sum(self.lam)) * hook_dimension(self.lam) * hook_dimension(self.rho)

    def __str__(self):
        def fmt(p):
            return "".join(map(str, p)) if p else "0"

        return f"({fmt(self.lam)},{fmt(self.rho)})"


def class_types(n: int) -> list[BClassType]:
    return [BClassType(mu, nu) for mu, nu in bipartitions(n)]


def irr_labels(n: int) -> list[IrrLabel]:
    return [IrrLabel(lam, rho) for lam, rho in bipartitions(n)]


def class_sizes_by_enumeration(n: int) -> dict:
    sizes: dict = {}
    for beta in signed.enumerate_bn(n):
        t = signed.signed_cycle_type(beta)
        sizes[t] = sizes.get(t, 0) + 1
    return sizes


# -- characteristics ------------------------------------------------------------

def _schur_plethysm(lam: tuple, sign_alphabet: bool) -> SymExpansion:
    """s_lam[z + zbar] or s_lam[z - zbar] in the p_{mu,nu} basis."""
    n = sum(lam)
    gen = p_minus if sign_alphabet else p_plus
    out = SymExpansion({}, n)
    for mu in partitions(n):
        chi = mn_character(tuple(lam), mu)
        if not chi:
            continue
        term = SymExpansion.one()
        for part in mu:
            term = term * gen(part)
        out = out + term.scale(Fraction(chi, z_mu(mu)))
    return out


@lru_cache(maxsize=None)
def _irreducible_cached(lam, rho) -> SymExpansion:
    return _schur_plethysm(lam, False) * _schur_plethysm(rho, True)


def irreducible_expansion(label: IrrLabel) -> SymExpansion:
    return _irreducible_cached(tuple(label.lam), tuple(label.rho))


def character_value(label: IrrLabel, cls: BClassType) -> int:
    v = irreducible_expansion(label).character_value(cls.positive, cls.negative)
    assert Fraction(v).denominator == 1
    return int(v)


def frob_regular(n: int) -> SymExpansion:
    """(2 p_1(z))^n, the characteristic of the regular representation."""
    return SymExpansion.p((1,) * n, (), 2 ** n)


def multiplicity(F: SymExpansion, label: IrrLabel):
    return scalar_product(F, irreducible_expansion(label))


def graded_char_Q(cls: BClassType, trunc: int) -> QTSeries:
    """Graded trace of a class element on Q[x]: prod 1/(1-q^mu_i) prod 1/(1+q^nu_j)."""
    out = QTSeries.one(trunc)
    for m in cls.positive:
        out = out * QTSeries.geometric(m, 0, trunc)
    for m in cls.negative:
        # 1/(1+q^m) = sum (-1)^k q^{km}
        out = out * QTSeries({(k * m, 0): (-1) ** k for k in range(trunc // m + 1)}, trunc)
    return out


def frob_graded_harmonics(n: int, trunc: int | None = None) -> SymExpansion:
    """F_q(H_{B_n}): graded characteristic of the coinvariant space in one set of variables."""
    trunc = default_trunc(n) if trunc is None else trunc
    P = product_one_minus(n).truncate(trunc)
    terms = {}
    for c in class_types(n):
        terms[(c.positive, c.negative)] = (graded_char_Q(c, trunc) * P).scale(
            Fraction(1, z_mu(c.positive) * z_mu(c.negative))
        )
    return SymExpansion(terms, n)


# -- alphabets -----------------------------------------------------------------

def alphabet_x(trunc):
    """1/(1-q^2)."""
    return Alphabet.rational({(0, 0): 1}, [(2, 0)], trunc)


def alphabet_x_odd(trunc):
    """q/(1-q^2)."""
    return Alphabet.rational({(1, 0): 1}, [(2, 0)], trunc)


def alphabet_diag_even(trunc):
    """(1+qt)/((1-q^2)(1-t^2))."""
    return Alphabet.rational({(0, 0): 1, (1, 1): 1}, [(2, 0), (0, 2)], trunc)


def alphabet_diag_odd(trunc):
    """(q+t)/((1-q^2)(1-t^2))."""
    return Alphabet.rational({(1, 0): 1, (0, 1): 1}, [(2, 0), (0, 2)], trunc)


@lru_cache(maxsize=None)
def _alphabets(trunc):
    return (alphabet_x(trunc), alphabet_x_odd(trunc), alphabet_diag_even(trunc), alphabet_diag_odd(trunc))


def invariant_denominator(n: int, trunc: int | None = None) -> QTSeries:
    """prod_{i<=n} (1-q^{2i})(1-t^{2i})."""
    out = product_one_minus(n) * product_one_minus(n, variable="t")
    return out if trunc is None else out.truncate(trunc)


# -- multiplicities ------------------------------------------------------------

def mult_graded(label: IrrLabel, n: int | None = None, trunc: int | None = None) -> QTSeries:
    """m_{lam,rho}(q) = s_lam[1/(1-q^2)] s_rho[q/(1-q^2)] prod (1-q^{2i}), certified polynomial."""
    n = label.level if n is None else n
    if n != label.level:
        raise SizeMismatch(f"label {label} has level {label.level}, not {n}")
    trunc = default_trunc(n) if trunc is None else trunc
    A, B, _, _ = _alphabets(trunc)
    s = schur_of_alphabet(label.lam, A) * schur_of_alphabet(label.rho, B) * product_one_minus(n).truncate(trunc)
    return s.certify_polynomial(n * n, 0)


def mult_bigraded_series(label: IrrLabel, trunc: int) -> QTSeries:
    """s_lam[(1+qt)/..] s_rho[(q+t)/..] before clearing denominators."""
    _, _, A, B = _alphabets(trunc)
    return schur_of_alphabet(label.lam, A) * schur_of_alphabet(label.rho, B)


def mult_bigraded(label: IrrLabel, n: int | None = None, trunc: int | None = None) -> QTSeries:
    n = label.level if n is None else n
    if n != label.level:
        raise SizeMismatch(f"label {label} has level {label.level}, not {n}")
    trunc = default_trunc(n) if trunc is None else trunc
    s = mult_bigraded_series(label, trunc) * invariant_denominator(n, trunc)
    return s.certify_polynomial(n * n)


def trivial_hilbert(n: int, trunc: int | None = None) -> QTSeries:
    trunc = default_trunc(n) if trunc is None else trunc
    _, _, A, _ = _alphabets(trunc)
    return (h_of_alphabet(n, A) * invariant_denominator(n, trunc)).certify_polynomial(n * n)


def alt_hilbert(n: int, trunc: int | None = None) -> QTSeries:
    trunc = default_trunc(n) if trunc is None else trunc
    _, _, _, B = _alphabets(trunc)
    return (e_of_alphabet(n, B) * invariant_denominator(n, trunc)).certify_polynomial(n * n)


# -- enumeration-side oracles ------------------------------------------------------

def fmaj_pair_sum(n: int, alternating: bool = False) -> QTSeries:
    """sum_beta q^{fmaj beta} t^{fmaj beta^-1}, or t^{n^2 - fmaj beta^-1} when alternating."""
    out: dict = {}
    for beta in signed.enumerate_bn(n):
        a = signed.fmaj(beta)
        b = signed.fmaj(signed.inverse(beta))
        if alternating:
            b = n * n - b
        out[(a, b)] = out.get((a, b), 0) + 1
    return QTSeries(out)


def fmaj_sum(n: int) -> QTSeries:
    out: dict = {}
    for beta in signed.enumerate_bn(n):
        k = signed.fmaj(beta)
        out[(k, 0)] = out.get((k, 0), 0) + 1
    return QTSeries(out)


def fmaj_product(n: int) -> QTSeries:
    """prod_{j<=n} (1 - q^{2j})/(1 - q) = prod [2j]_q."""
    out = QTSeries.one()
    for j in range(1, n + 1):
        out = out * QTSeries({(k, 0): 1 for k in range(2 * j)})
    return out


# -- verification reports ------------------------------------------------------

@dataclass
class VerifyReport:
    identity: str
    n: int
    status: str = "PASS"
    first_discrepancy: dict | None = None
    label: str | None = None
    details: list = field(default_factory=list)

    @property
    def ok(self):
        return self.status == "PASS"

    def to_json(self) -> dict:
        out = {"identity": self.identity, "n": self.n, "status": self.status, "first_discrepancy": self.first_discrepancy}
        if self.label is not None:
            out["label"] = self.label
        return out


def compare(identity: str, n: int, lhs: QTSeries, rhs: QTSeries, label: str | None = None) -> VerifyReport:
    disc = lhs.first_discrepancy(rhs)
    return VerifyReport(identity, n, "PASS" if disc is None else "FAIL", disc, label)


def verify_genfunction(n: int, trunc: int | None = None) -> VerifyReport:
    """h_n[(1+qt)/((1-q^2)(1-t^2))] = sum q^fmaj t^fmaj(inv) / prod (1-q^2i)(1-t^2i)."""
    trunc = default_trunc(n) if trunc is None else trunc
    _, _, A, _ = _alphabets(trunc)
    lhs = h_of_alphabet(n, A)
    rhs = fmaj_pair_sum(n).truncate(trunc)
    for i in range(1, n + 1):
        rhs = rhs * QTSeries.geometric(2 * i, 0, trunc) * QTSeries.geometric(0, 2 * i, trunc)
    return compare("genfunction", n, lhs, rhs)


def verify_ogenfunction(n: int, trunc: int | None = None) -> VerifyReport:
    trunc = default_trunc(n) if trunc is None else trunc
    _, _, _, B = _alphabets(trunc)
    lhs = e_of_alphabet(n, B)
    rhs = fmaj_pair_sum(n, alternating=True).truncate(trunc)
    for i in range(1, n + 1):
        rhs = rhs * QTSeries.geometric(2 * i, 0, trunc) * QTSeries.geometric(0, 2 * i, trunc)
    return compare("ogenfunction", n, lhs, rhs)


def verify_flip_symmetry(n: int, raise_on_failure: bool = False) -> list[VerifyReport]:
    """m_{rho',lam'}(q) = q^{n^2} m_{lam,rho}(1/q) for every label at level n."""
    reports = []
    for lab in irr_labels(n):
        flipped = IrrLabel(conjugate(lab.rho), conjugate(lab.lam))
        lhs = mult_graded(flipped, n)
        rhs = mult_graded(lab, n).reverse_q(n * n)
        rep = compare("flip", n, lhs, rhs, str(lab))
        if raise_on_failure and not rep.ok:
            raise IdentityFailed(str(lab), rep)
        reports.append(rep)
    return reports


def verify_table3() -> list[VerifyReport]:
    reports = []
    for (lam, rho), exps in N3_TABLE.items():
        lab = IrrLabel(lam, rho)
        expected = QTSeries({(e, 0): 1 for e in exps})
        reports.append(compare("table3", 3, mult_graded(lab, 3), expected, str(lab)))
    return reports


def verify_regular(n: int) -> list[VerifyReport]:
    """Multiplicity of each irreducible in the regular representation, and q=t=1 dimensions."""
    reports = []
    reg = frob_regular(n)
    order = signed.order(n)
    for lab in irr_labels(n):
        dim = lab.dimension()
        m = multiplicity(reg, lab)
        at_one = mult_bigraded(lab, n).evaluate(1, 1)
        expected_at_one = order * dim
        ok = m == dim and at_one == expected_at_one
        disc = None
        if not ok:
            disc = {"q_exp": 0, "t_exp": 0, "lhs": f"{m}|{at_one}", "rhs": f"{dim}|{expected_at_one}"}
        reports.append(VerifyReport("regular", n, "PASS" if ok else "FAIL", disc, str(lab)))
    return reports


def verify_corollary(n: int) -> VerifyReport:
    """sum q^{|g(beta)|} t^{|ghat(beta)|} = sum q^fmaj t^{n^2 - fmaj(inv)}."""
    out: dict = {}
    for beta in signed.enumerate_bn(n):
        k = (sum(signed.g_vector(beta)), sum(signed.g_hat(beta)))
        out[k] = out.get(k, 0) + 1
    return compare("corollary", n, QTSeries(out), fmaj_pair_sum(n, alternating=True))


def psi_polynomial(lam: tuple, mu: tuple, n: int, trunc: int | None = None) -> QTSeries:
    """Psi_{lam,mu}(q,t): the bigraded multiplicity divided by the two Gaussian binomials.

    Raises DivisionInexact or NegativeCoefficient if the quotient is not a
    polynomial with nonnegative integer coefficients.
    """
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) + sum(mu) != n:
        raise SizeMismatch(f"|{lam}| + |{mu}| must equal n={n}")
    num = mult_bigraded(IrrLabel(lam, mu), n, trunc)
    den = q_binomial(n, sum(lam), step=2) * q_binomial(n, sum(mu), step=2, variable="t")
    psi = num.exact_divide(den)
    for k, v in psi.items():
        if v.denominator != 1 or v < 0:
            raise NegativeCoefficient(f"Psi_{lam},{mu} has coefficient {v} at q^{k[0]} t^{k[1]}")
    return psi


def verify_psi_positivity(lam: tuple, mu: tuple, n: int) -> VerifyReport:
    label = str(IrrLabel(tuple(lam), tuple(mu)))
    try:
        psi_polynomial(lam, mu, n)
    except (DivisionInexact, NegativeCoefficient) as exc:
        return VerifyReport("psi", n, "FAIL", {"q_exp": -1, "t_exp": -1, "lhs": str(exc), "rhs": ""}, label)
    return VerifyReport("psi", n, "PASS", None, label)


def verify_t0_bridge(n: int) -> list[VerifyReport]:
    """Compare mult_bigraded at t=0 with mult_graded; reported, never asserted."""
    out = []
    for lab in irr_labels(n):
        out.append(compare("t0_bridge", n, mult_bigraded(lab, n).at_t0(), mult_graded(lab, n), str(lab)))
    return out
