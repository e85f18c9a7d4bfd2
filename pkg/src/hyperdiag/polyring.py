"""Exact polynomials in x_1..x_n, y_1..y_n, the diagonal action of B_n, and
straightening of monomial diagonal invariants onto the compact basis.

Exponent vectors are interleaved: (x_1, y_1, x_2, y_2, ..., x_n, y_n).
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import signed
from .ediagrams import EDiagram, classifying_perm, compact_of_perm, normalize, phi
from .errors import NonTermination, NotEDiagram, OddParityCell, SizeMismatch, TooManyParts
from .odiagrams import ODiagram
from .signed import SignedPermutation
from .symfunc import conjugate


class DiagPoly:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != 2 * n:
                raise SizeMismatch(f"exponent vector of length {len(e)} in a ring with {n} variable pairs")
            if c:
                clean[e] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms = clean

    @classmethod
    def _raw(cls, n, terms):
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, n, c=1):
        return cls(n, {(0,) * (2 * n): c})

    @classmethod
    def monomial(cls, a: Sequence[int], b: Sequence[int], c=1):
        n = len(a)
        return cls(n, {interleave(a, b): c})

    @classmethod
    def x(cls, i, n):
        e = [0] * (2 * n)
        e[2 * (i - 1)] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def y(cls, i, n):
        e = [0] * (2 * n)
        e[2 * (i - 1) + 1] = 1
        return cls(n, {tuple(e): 1})

    def _check(self, other):
        if self.n != other.n:
            raise SizeMismatch(f"{self.n} vs {other.n} variable pairs")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = DiagPoly.constant(self.n, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return DiagPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return DiagPoly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return DiagPoly._raw(self.n, {})
        return DiagPoly._raw(self.n, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(u + v for u, v in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return DiagPoly._raw(self.n, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = DiagPoly.constant(self.n, other)
        if not isinstance(other, DiagPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def bidegrees(self) -> set:
        return {(sum(e[0::2]), sum(e[1::2])) for e in self.terms}

    def leading_monomial(self) -> tuple:
        """Largest exponent vector for the order x_1 < y_1 < ... < x_n < y_n, read
        from the largest variable pair down (x_n before y_n within a pair)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=_priority_key)

    def to_json(self):
        return [[list(e), c.numerator, c.denominator] for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, n, data):
        return cls(n, {tuple(e): Fraction(num, den) for e, num, den in data})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda kv: _priority_key(kv[0]), reverse=True):
            factors = []
            for i in range(self.n):
                for name, k in (("x", e[2 * i]), ("y", e[2 * i + 1])):
                    if k == 1:
                        factors.append(f"{name}{i + 1}")
                    elif k:
                        factors.append(f"{name}{i + 1}^{k}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"DiagPoly({self})"


def interleave(a: Sequence[int], b: Sequence[int]) -> tuple:
    out = []
    for u, v in zip(a, b):
        out.extend((u, v))
    return tuple(out)


def _priority_key(e):
    n = len(e) // 2
    return tuple(e[k] for i in range(n - 1, -1, -1) for k in (2 * i, 2 * i + 1))


# -- group action -----------------------------------------------------------------

def act(beta: SignedPermutation, p: DiagPoly) -> DiagPoly:
    """Substitute x_i -> eps_i x_{sigma(i)}, y_i -> eps_i y_{sigma(i)} with beta(i) = eps_i sigma(i)."""
    if beta.n != p.n:
        raise SizeMismatch(f"B_{beta.n} acting on {p.n} variable pairs")
    n = p.n
    out = {}
    for e, c in p.terms.items():
        new = [0] * (2 * n)
        sgn = 1
        for i, v in enumerate(beta.window):
            s = abs(v) - 1
            new[2 * s] = e[2 * i]
            new[2 * s + 1] = e[2 * i + 1]
            if v < 0 and (e[2 * i] + e[2 * i + 1]) % 2:
                sgn = -sgn
        out[tuple(new)] = c if sgn > 0 else -c
    return DiagPoly._raw(n, out)


# -- special polynomials -------------------------------------------------------------

def _distinct_permutations(seq):
    return set(itertools.permutations(seq))


def monomial_invariant(a, b=None) -> DiagPoly:
    """M(a, b): sum of the distinct monomials obtained by permuting the variable pairs."""
    cells = list(a.cells) if isinstance(a, EDiagram) else list(zip(a, b))
    for x, y in cells:
        if (x + y) % 2:
            raise NotEDiagram(f"cell ({x},{y}) has odd parity")
    n = len(cells)
    terms = {}
    for arrangement in _distinct_permutations(tuple(cells)):
        terms[tuple(v for c in arrangement for v in c)] = Fraction(1)
    return DiagPoly._raw(n, terms)


def monomial_sym_squares(lam: Sequence[int], which: str, n: int) -> DiagPoly:
    """m_lam(x_1^2, ..., x_n^2) or the same in the y variables."""
    lam = tuple(lam)
    if len(lam) > n:
        raise TooManyParts(f"{lam} has more than {n} parts")
    if which not in ("x", "y"):
        raise ValueError("which must be 'x' or 'y'")
    off = 0 if which == "x" else 1
    padded = lam + (0,) * (n - len(lam))
    terms = {}
    for alpha in _distinct_permutations(padded):
        e = [0] * (2 * n)
        for i, k in enumerate(alpha):
            e[2 * i + off] = 2 * k
        terms[tuple(e)] = Fraction(1)
    return DiagPoly._raw(n, terms)


def jacobian_delta(n: int) -> DiagPoly:
    """x_1 ... x_n prod_{i<j} (x_i^2 - x_j^2)."""
    p = DiagPoly.constant(n)
    for i in range(1, n + 1):
        p = p * DiagPoly.x(i, n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            xi, xj = DiagPoly.x(i, n), DiagPoly.x(j, n)
            p = p * (xi * xi - xj * xj)
    return p


def alternant(D: ODiagram) -> DiagPoly:
    """det [x_i^{a_j} y_i^{b_j}] expanded by the Leibniz formula."""
    cells = D.cells
    n = len(cells)
    out: dict = {}
    for perm in itertools.permutations(range(n)):
        sgn = signed._perm_sign([p + 1 for p in perm])
        e = tuple(v for i in range(n) for v in cells[perm[i]])
        out[e] = out.get(e, 0) + sgn
    return DiagPoly(n, out)


# -- straightening ------------------------------------------------------------------

@dataclass(frozen=True)
class StraightenedTerm:
    lam: tuple
    mu: tuple
    beta: SignedPermutation
    coeff: Fraction

    def to_json(self):
        c = Fraction(self.coeff)
        return {
            "lam": list(self.lam),
            "mu": list(self.mu),
            "beta": list(self.beta.window),
            "coeff": str(c) if c.denominator != 1 else c.numerator,
        }


@dataclass(frozen=True)
class StraightenedForm:
    n: int
    terms: tuple

    def to_json(self):
        return [t.to_json() for t in self.terms]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for t in self.terms:
            lam = "".join(map(str, t.lam)) or "0"
            mu = "".join(map(str, t.mu)) or "0"
            parts.append(f"{t.coeff}*m_{lam}(x^2)*m_{mu}(y^2)*M[{t.beta}]")
        return " + ".join(parts)


def _stab(cells) -> int:
    out = 1
    for m in Counter(cells).values():
        out *= math.factorial(m)
    return out


def product_in_m_basis(lam, mu, compact: EDiagram) -> dict:
    """m_lam(x^2) m_mu(y^2) M(compact) as {diagram cells: integer coefficient}.

    Each pair of distinct rearrangements (alpha, gamma) of the padded parts is
    added to the sorted columns; a resulting multiset D collects weight
    |Stab(D)| / |Stab(compact)| per occurrence, which converts the count of
    monomial triples into the coefficient of the orbit sum M(D).
    """
    n = compact.n
    if len(lam) > n or len(mu) > n:
        raise TooManyParts("more parts than variables")
    base = compact.cells
    stab_c = _stab(base)
    pa = tuple(lam) + (0,) * (n - len(lam))
    pm = tuple(mu) + (0,) * (n - len(mu))
    out: dict = {}
    for alpha in _distinct_permutations(pa):
        for gamma in _distinct_permutations(pm):
            cells = tuple(sorted((c[0] + 2 * u, c[1] + 2 * v) for c, u, v in zip(base, alpha, gamma)))
            out[cells] = out.get(cells, 0) + Fraction(_stab(cells), stab_c)
    return out


def count_ediagrams_of_bidegree(n: int, A: int, B: int) -> int:
    """Number of n-cell e-diagrams with |a| = A and |b| = B."""
    f = [[[0] * (B + 1) for _ in range(A + 1)] for _ in range(n + 1)]
    f[0][0][0] = 1
    for a in range(A + 1):
        for b in range(B + 1):
            if (a + b) % 2:
                continue
            for k in range(1, n + 1):
                fk, fk1 = f[k], f[k - 1]
                for x in range(a, A + 1):
                    for y in range(b, B + 1):
                        fk[x][y] += fk1[x - a][y - b]
    return f[n][A][B]


def straighten(a, b=None, order: str = "min", rng: random.Random | None = None, cap: int | None = None) -> StraightenedForm:
    """Write M(a, b) as sum u_beta(x, y) M_beta with u_beta in m_lam(x^2) m_mu(y^2).

    The pending diagram that is smallest in tuple order of its sorted cells is
    resolved first (``order="min"``); ``order="random"`` picks pending
    diagrams at random and exists to test that the result does not depend on
    the order.
    """
    try:
        D = a if isinstance(a, EDiagram) else normalize(list(zip(a, b)))
    except OddParityCell as exc:
        raise NotEDiagram(str(exc)) from exc
    n = D.n
    A, B = D.weight()
    if cap is None:
        cap = count_ediagrams_of_bidegree(n, A, B)
        if order == "random":
            cap = cap * cap + 1
    pending: dict = {D.cells: Fraction(1)}
    result: dict = {}
    steps = 0
    while pending:
        steps += 1
        if steps > cap:
            raise NonTermination(f"straightening exceeded {cap} steps")
        if order == "min":
            cur = min(pending)
        else:
            cur = (rng or random.Random(0)).choice(sorted(pending))
        coef = pending.pop(cur)
        r = phi(EDiagram(cur))
        beta = classifying_perm(r.compact)
        # phi records big-move sizes; the monomial symmetric factor that
        # produces those moves is indexed by the conjugate partitions
        lam, mu = conjugate(r.lam), conjugate(r.mu)
        expansion = product_in_m_basis(lam, mu, r.compact)
        own = expansion.pop(cur)
        factor = coef / own
        key = (lam, mu, beta)
        result[key] = result.get(key, 0) + factor
        for cells, c in expansion.items():
            v = pending.get(cells, 0) - factor * c
            if v:
                pending[cells] = v
            else:
                pending.pop(cells, None)
    terms = tuple(
        StraightenedTerm(lam, mu, beta, Fraction(c))
        for (lam, mu, beta), c in sorted(result.items(), key=lambda kv: (kv[0][2].window, kv[0][0], kv[0][1]))
        if c
    )
    return StraightenedForm(n, terms)


def expand_straightened(s: StraightenedForm) -> DiagPoly:
    """Multiply everything out as honest polynomials."""
    out = DiagPoly(s.n)
    for t in s.terms:
        p = monomial_sym_squares(t.lam, "x", s.n) * monomial_sym_squares(t.mu, "y", s.n)
        p = p * monomial_invariant(compact_of_perm(t.beta))
        out = out + p.scale(t.coeff)
    return out


def compact_basis(n: int) -> dict:
    """{beta: M_beta} over B_n."""
    return {beta: monomial_invariant(compact_of_perm(beta)) for beta in signed.enumerate_bn(n)}
