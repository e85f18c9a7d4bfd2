"""Signed permutations of [n] (the hyperoctahedral group B_n) and their statistics.

A signed permutation is stored in one-line notation, ``window[i-1] = beta(i)``,
with negative entries written with a leading ``-`` (the overline of the usual
notation).  Entries are compared with the order

    -1 < -2 < ... < -n < 0 < 1 < 2 < ... < n

so that negative letters sit below every nonnegative one and are ordered by
*decreasing* value among themselves.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import CapExceeded, DuplicateAbs, OutOfRange, ParseError, SizeMismatch, ZeroEntry

DEFAULT_CAP = 7


def entry_key(x: int) -> tuple[int, int]:
    """Sort key realising the total order on signed letters."""
    return (0, -x) if x < 0 else (1, x)


def precedes(x: int, y: int) -> bool:
    return entry_key(x) < entry_key(y)


@dataclass(frozen=True)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(v) for v in self.window)
        object.__setattr__(self, "window", w)
        n = len(w)
        seen = set()
        for v in w:
            if v == 0:
                raise ZeroEntry(f"zero entry in {w}")
            if abs(v) > n:
                raise OutOfRange(f"|{v}| exceeds n={n}")
            if abs(v) in seen:
                raise DuplicateAbs(f"|{v}| repeated in {w}")
            seen.add(abs(v))

    # -- construction -------------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        return parse(text)

    # -- basic accessors ----------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.window)

    def __len__(self):
        return len(self.window)

    def __call__(self, i: int) -> int:
        """beta(i) for 1 <= i <= n."""
        return self.window[i - 1]

    def __iter__(self):
        return iter(self.window)

    @property
    def sigma(self) -> tuple[int, ...]:
        """The underlying permutation |beta(i)|."""
        return tuple(abs(v) for v in self.window)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if v > 0 else -1 for v in self.window)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def inverse(self) -> "SignedPermutation":
        return inverse(self)

    def __str__(self):
        return " ".join(str(v) for v in self.window)

    def __repr__(self):
        return f"SignedPermutation({self})"

    def to_json(self) -> list[int]:
        return list(self.window)

    @classmethod
    def from_json(cls, data) -> "SignedPermutation":
        return cls(tuple(data))

    def overline(self) -> str:
        """Compact rendering with a combining overline on negative letters."""
        return "".join(f"{-v}̅" if v < 0 else str(v) for v in self.window)


def parse(text: str) -> SignedPermutation:
    tokens = text.replace(",", " ").split()
    try:
        values = tuple(int(tok) for tok in tokens)
    except ValueError as exc:
        raise ParseError(f"not an integer in {text!r}") from exc
    return SignedPermutation(values)


# -- group structure ---------------------------------------------------------

def compose(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    """(a o b)(i) = a applied after b, signs multiply along the way."""
    if a.n != b.n:
        raise SizeMismatch(f"B_{a.n} vs B_{b.n}")
    out = []
    for v in b.window:
        w = a.window[abs(v) - 1]
        out.append(w if v > 0 else -w)
    return SignedPermutation(tuple(out))


def inverse(beta: SignedPermutation) -> SignedPermutation:
    out = [0] * beta.n
    for i, v in enumerate(beta.window, start=1):
        out[abs(v) - 1] = i if v > 0 else -i
    return SignedPermutation(tuple(out))


def longest_element(n: int) -> SignedPermutation:
    """w0 = n ... 2 1 (unsigned reversal)."""
    return SignedPermutation(tuple(range(n, 0, -1)))


def circ_involution(beta: SignedPermutation) -> SignedPermutation:
    """beta -> -w0 beta w0, a global sign change of the w0-conjugate."""
    w0 = longest_element(beta.n)
    conj = compose(w0, compose(beta, w0))
    return SignedPermutation(tuple(-v for v in conj.window))


def sign(beta: SignedPermutation) -> int:
    """Determinant of the signed permutation matrix."""
    s = -1 if neg(beta) % 2 else 1
    return s * _perm_sign(beta.sigma)


def _perm_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    s = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def signed_cycle_type(beta: SignedPermutation) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(mu_plus, mu_minus): lengths of positive and negative cycles.

    A cycle is negative when it contains an odd number of negative entries.
    """
    n = beta.n
    seen = [False] * (n + 1)
    pos, negs = [], []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length = 0
        nneg = 0
        j = start
        while not seen[j]:
            seen[j] = True
            v = beta(j)
            nneg += v < 0
            j = abs(v)
            length += 1
        (negs if nneg % 2 else pos).append(length)
    return tuple(sorted(pos, reverse=True)), tuple(sorted(negs, reverse=True))


# -- enumeration -------------------------------------------------------------

def enumerate_bn(n: int, cap: int = DEFAULT_CAP) -> Iterator[SignedPermutation]:
    """All 2^n n! elements, lexicographic in (permutation, sign mask)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds enumeration cap {cap}")
    for perm in itertools.permutations(range(1, n + 1)):
        for mask in itertools.product((0, 1), repeat=n):
            yield SignedPermutation(tuple(-p if m else p for p, m in zip(perm, mask)))


def order(n: int) -> int:
    return 2 ** n * math.factorial(n)


# -- statistics --------------------------------------------------------------

@dataclass(frozen=True)
class StatRecord:
    des: frozenset
    ris: frozenset
    maj: int
    neg: int
    fmaj: int


def descents(beta: SignedPermutation) -> frozenset:
    w = beta.window
    return frozenset(i for i in range(1, beta.n) if precedes(w[i], w[i - 1]))


def rises(beta: SignedPermutation) -> frozenset:
    w = beta.window
    return frozenset(i for i in range(1, beta.n) if precedes(w[i - 1], w[i]))


def neg(beta: SignedPermutation) -> int:
    return sum(1 for v in beta.window if v < 0)


def maj(beta: SignedPermutation) -> int:
    return sum(descents(beta))


def fmaj(beta: SignedPermutation) -> int:
    return 2 * maj(beta) + neg(beta)


def stats(beta: SignedPermutation) -> StatRecord:
    des = descents(beta)
    m = sum(des)
    k = neg(beta)
    return StatRecord(des=des, ris=rises(beta), maj=m, neg=k, fmaj=2 * m + k)


@dataclass(frozen=True)
class LocalVectors:
    """Position-wise refinements of fmaj and of the compact diagram rows.

    ``f[i] = 2 d[i] + eps[i]`` sums to fmaj; ``g[i] = 2 delta[i] + eta[i]`` is
    the top row of the compact e-diagram; ``mu[i]`` counts rises of the inverse
    strictly before ``i``.  All vectors are 0-indexed over positions 1..n.
    """

    f: tuple[int, ...]
    g: tuple[int, ...]
    mu: tuple[int, ...]
    d: tuple[int, ...]
    delta: tuple[int, ...]
    eps: tuple[int, ...]
    eta: tuple[int, ...]


def local_vectors(beta: SignedPermutation) -> LocalVectors:
    n = beta.n
    des = descents(beta)
    eps = tuple(1 if v < 0 else 0 for v in beta.window)
    eta = tuple(1 - e for e in eps)
    d = tuple(sum(1 for j in des if j >= i) for i in range(1, n + 1))
    delta = tuple(sum(1 for j in des if j < i) for i in range(1, n + 1))
    ris_inv = rises(inverse(beta))
    mu = tuple(sum(1 for k in ris_inv if k < i) for i in range(1, n + 1))
    return LocalVectors(
        f=tuple(2 * di + ei for di, ei in zip(d, eps)),
        g=tuple(2 * di + hi for di, hi in zip(delta, eta)),
        mu=mu,
        d=d,
        delta=delta,
        eps=eps,
        eta=eta,
    )


def g_vector(beta: SignedPermutation) -> tuple[int, ...]:
    return local_vectors(beta).g


def g_tilde(beta: SignedPermutation) -> tuple[int, ...]:
    """g~_i(beta) = g_{sigma(i)}(beta^{-1})."""
    ginv = g_vector(inverse(beta))
    return tuple(ginv[s - 1] for s in beta.sigma)


def g_hat(beta: SignedPermutation) -> tuple[int, ...]:
    """g^_i(beta) = 2 mu_{sigma(i)}(beta) + eps_i(beta)."""
    lv = local_vectors(beta)
    return tuple(2 * lv.mu[s - 1] + e for s, e in zip(beta.sigma, lv.eps))


def descent_basis_exponents(beta: SignedPermutation) -> tuple[int, ...]:
    """Exponent vector of x_beta = prod_i x_{sigma(i)}^{f_i(beta)}, indexed by variable."""
    f = local_vectors(beta).f
    exps = [0] * beta.n
    for s, fi in zip(beta.sigma, f):
        exps[s - 1] = fi
    return tuple(exps)
