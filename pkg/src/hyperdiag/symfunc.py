"""Partitions, S_n characters, plethystic evaluation at q,t-alphabets, and
symmetric functions in two alphabets (z, zbar) stored in the power-sum basis.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty partition is ``()``.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .errors import LevelMismatch, SizeMismatch
from .series import QTSeries

Partition = tuple


# -- partitions ----------------------------------------------------------------

def is_partition(p) -> bool:
    return all(isinstance(x, int) and x >= 1 for x in p) and all(p[i] >= p[i + 1] for i in range(len(p) - 1))


def as_partition(p) -> Partition:
    p = tuple(int(x) for x in p if int(x) != 0)
    if not is_partition(p):
        raise ValueError(f"{p} is not a partition")
    return p


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse lexicographic order ((n) first)."""
    if n == 0:
        return ((),)
    out = []

    def rec(rem, maxpart, prefix):
        if rem == 0:
            out.append(tuple(prefix))
            return
        for k in range(min(rem, maxpart), 0, -1):
            prefix.append(k)
            rec(rem - k, k, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def bipartitions(n: int) -> list[tuple[Partition, Partition]]:
    """Pairs (lam, rho) with |lam| + |rho| = n, larger |lam| first."""
    return [(lam, rho) for k in range(n, -1, -1) for lam in partitions(k) for rho in partitions(n - k)]


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def z_mu(mu: Partition) -> int:
    """prod_i i^{k_i} k_i! where k_i is the multiplicity of i in mu."""
    out = 1
    for part, mult in Counter(mu).items():
        out *= part ** mult * math.factorial(mult)
    return out


def hook_dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam."""
    n = sum(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(n) // hooks


# -- characters of S_n ------------------------------------------------------------

@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """chi^lam evaluated on cycle type mu, by the Murnaghan-Nakayama rule.

    Rim hooks are removed through the beta-set (abacus) picture: removing a
    k-hook slides one bead from x to x-k, with sign (-1)^(beads jumped over).
    """
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    ell = len(lam)
    beads = [lam[i] + (ell - 1 - i) for i in range(ell)]
    occupied = set(beads)
    total = 0
    for x in beads:
        y = x - k
        if y < 0 or y in occupied:
            continue
        height = sum(1 for b in beads if y < b < x)
        new = sorted((b if b != x else y for b in beads), reverse=True)
        m = len(new)
        shape = tuple(p for p in (new[i] - (m - 1 - i) for i in range(m)) if p > 0)
        total += (-1) ** height * mn_character(shape, rest)
    return total


def character_table(n: int) -> dict:
    return {(lam, mu): mn_character(lam, mu) for lam in partitions(n) for mu in partitions(n)}


# -- alphabets and plethysm ------------------------------------------------------

class Alphabet:
    """A formal sum of monomials q^a t^b, realised as a truncated series.

    Power sums of the alphabet are memoised, since every Schur/h/e evaluation
    at level n reuses the same p_mu[A].
    """

    def __init__(self, series: QTSeries, check: bool = True):
        if check and not all(v >= 0 for _, v in series.items()):
            raise ValueError("alphabet must have nonnegative coefficients")
        self.series = series
        self._pk: dict[int, QTSeries] = {}
        self._pmu: dict[Partition, QTSeries] = {}

    @property
    def trunc(self):
        return self.series.trunc

    @classmethod
    def rational(cls, numerator: dict, denominator: list[tuple[int, int]], trunc: int) -> "Alphabet":
        """numerator / prod (1 - q^a t^b), numerator given as {(i, j): c}."""
        s = QTSeries(numerator, trunc)
        for a, b in denominator:
            s = s * QTSeries.geometric(a, b, trunc)
        return cls(s)

    def __mul__(self, other: "Alphabet") -> "Alphabet":
        return Alphabet(self.series * other.series)

    def __add__(self, other: "Alphabet") -> "Alphabet":
        return Alphabet(self.series + other.series)

    def p(self, k: int) -> QTSeries:
        if k not in self._pk:
            self._pk[k] = self.series.scale_exponents(k)
        return self._pk[k]

    def p_mu(self, mu: Partition) -> QTSeries:
        mu = tuple(mu)
        if mu not in self._pmu:
            if not mu:
                val = QTSeries.one(self.trunc)
            else:
                val = self.p_mu(mu[:-1]) * self.p(mu[-1])
            self._pmu[mu] = val
        return self._pmu[mu]

    def __repr__(self):
        return f"Alphabet({self.series})"


def alphabet_power(A: Alphabet, k: int) -> Alphabet:
    if k < 1:
        raise ValueError("k must be positive")
    return Alphabet(A.p(k), check=False)


def _expand_in_p(A: Alphabet, weights: dict[Partition, Fraction]) -> QTSeries:
    out = QTSeries.zero(A.trunc)
    for mu, w in weights.items():
        if w:
            out = out + A.p_mu(mu).scale(w)
    return out


def h_of_alphabet(n: int, A: Alphabet) -> QTSeries:
    return _expand_in_p(A, {mu: Fraction(1, z_mu(mu)) for mu in partitions(n)})


def e_of_alphabet(n: int, A: Alphabet) -> QTSeries:
    return _expand_in_p(A, {mu: Fraction((-1) ** (n - len(mu)), z_mu(mu)) for mu in partitions(n)})


def schur_of_alphabet(lam: Partition, A: Alphabet) -> QTSeries:
    n = sum(lam)
    return _expand_in_p(A, {mu: Fraction(mn_character(tuple(lam), mu), z_mu(mu)) for mu in partitions(n)})


def omega_of_alphabet(A: Alphabet, degree: int) -> QTSeries:
    """Sum of h_k[A] for k <= degree, i.e. Omega[A] cut at total degree ``degree``."""
    out = QTSeries.zero(A.trunc)
    for k in range(degree + 1):
        out = out + h_of_alphabet(k, A)
    return out


# -- symmetric functions in z, zbar --------------------------------------------

def _is_zero(c) -> bool:
    return not c


class SymExpansion:
    """Element of Lambda(z) (x) Lambda(zbar) in the basis p_mu(z) p_nu(zbar).

    Coefficients may be integers, Fractions or QTSeries.  All keys share the
    same level |mu| + |nu|.
    """

    __slots__ = ("terms", "level")

    def __init__(self, terms: dict | None = None, level: int | None = None):
        clean = {}
        for (mu, nu), c in (terms or {}).items():
            if _is_zero(c):
                continue
            mu, nu = tuple(mu), tuple(nu)
            lv = sum(mu) + sum(nu)
            if level is None:
                level = lv
            elif lv != level:
                raise LevelMismatch(f"term ({mu},{nu}) has level {lv}, expected {level}")
            clean[(mu, nu)] = c
        self.terms = clean
        self.level = level

    @classmethod
    def p(cls, mu: Partition, nu: Partition, coeff=1) -> "SymExpansion":
        return cls({(tuple(mu), tuple(nu)): coeff})

    @classmethod
    def one(cls) -> "SymExpansion":
        return cls({((), ()): 1}, 0)

    def _check_level(self, other):
        if self.terms and other.terms and self.level != other.level:
            raise LevelMismatch(f"levels {self.level} and {other.level}")

    def __add__(self, other: "SymExpansion") -> "SymExpansion":
        self._check_level(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return SymExpansion(out, self.level if self.level is not None else other.level)

    def __neg__(self):
        return SymExpansion({k: -c for k, c in self.terms.items()}, self.level)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymExpansion":
        return SymExpansion({k: v * c for k, v in self.terms.items()}, self.level)

    def __mul__(self, other):
        """Ordinary product: p_{mu,nu} p_{mu',nu'} = p_{mu+mu', nu+nu'}."""
        if not isinstance(other, SymExpansion):
            return self.scale(other)
        out: dict = {}
        for (m1, n1), c1 in self.terms.items():
            for (m2, n2), c2 in other.terms.items():
                key = (tuple(sorted(m1 + m2, reverse=True)), tuple(sorted(n1 + n2, reverse=True)))
                prod = c1 * c2
                out[key] = out[key] + prod if key in out else prod
        lv = None if self.level is None or other.level is None else self.level + other.level
        return SymExpansion(out, lv)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, SymExpansion):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(self.terms.get(k, 0) == other.terms.get(k, 0) for k in keys)

    def coefficient(self, mu, nu):
        return self.terms.get((tuple(mu), tuple(nu)), 0)

    def character_value(self, mu, nu):
        """Value of the class function on signed cycle type (mu, nu)."""
        return self.coefficient(mu, nu) * (z_mu(tuple(mu)) * z_mu(tuple(nu)))

    def __repr__(self):
        return f"SymExpansion(level={self.level}, {len(self.terms)} terms)"


def internal_product(u: SymExpansion, v: SymExpansion) -> SymExpansion:
    """Kronecker product: diagonal in p_{mu,nu} with p * p = z_mu z_nu p."""
    u._check_level(v)
    out = {}
    for k, c in u.terms.items():
        if k in v.terms:
            out[k] = c * v.terms[k] * (z_mu(k[0]) * z_mu(k[1]))
    return SymExpansion(out, u.level if u.level is not None else v.level)


def scalar_product(u: SymExpansion, v: SymExpansion):
    """Pairing under which the irreducible characteristics are orthonormal.

    With character value = coefficient * z_mu z_nu and class size
    2^n n! / (z_mu z_nu 2^{l(mu)+l(nu)}), the inner product of characters
    becomes sum c_u c_v z_mu z_nu / 2^{l(mu)+l(nu)}.
    """
    u._check_level(v)
    total = 0
    for k, c in u.terms.items():
        if k in v.terms:
            mu, nu = k
            total = total + c * v.terms[k] * Fraction(z_mu(mu) * z_mu(nu), 2 ** (len(mu) + len(nu)))
    return total


def p_plus(k: int) -> SymExpansion:
    """p_k[z + zbar] = p_k(z) + p_k(zbar)."""
    return SymExpansion({((k,), ()): 1, ((), (k,)): 1})


def p_minus(k: int) -> SymExpansion:
    """p_k[z - zbar] = p_k(z) - p_k(zbar)."""
    return SymExpansion({((k,), ()): 1, ((), (k,)): -1})


def neutral_element(n: int) -> SymExpansion:
    """Sum of p_{mu,nu} / (z_mu z_nu) over level n, the unit for the internal product."""
    return SymExpansion({(mu, nu): Fraction(1, z_mu(mu) * z_mu(nu)) for mu, nu in bipartitions(n)}, n)
