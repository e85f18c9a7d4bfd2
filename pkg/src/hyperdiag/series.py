"""Truncated bivariate power series in q, t with exact rational coefficients.

A ``QTSeries`` keeps every coefficient whose q- and t-exponents are both at
most its truncation order ``trunc``.  ``trunc=None`` means the object is an
exact polynomial.  Products of truncated series are exact up to the smaller
of the two orders, since no negative exponents ever occur.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DivisionInexact, NegativeCoefficient, NotPolynomial

Number = int | Fraction

# below this many term pairs the schoolbook product beats packing into big ints
_KRONECKER_THRESHOLD = 4000


def _min_trunc(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _to_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class QTSeries:
    __slots__ = ("_c", "trunc")

    def __init__(self, coeffs: Mapping[tuple[int, int], Number] | None = None, trunc: int | None = None):
        self.trunc = trunc
        c = {}
        if coeffs:
            for (i, j), v in coeffs.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent ({i},{j})")
                if trunc is not None and (i > trunc or j > trunc):
                    continue
                if v:
                    c[(i, j)] = _to_fraction(v)
        self._c = c

    @classmethod
    def _raw(cls, coeffs: dict, trunc):
        obj = cls.__new__(cls)
        obj._c = coeffs
        obj.trunc = trunc
        return obj

    # -- constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, trunc=None):
        return cls({}, trunc)

    @classmethod
    def one(cls, trunc=None):
        return cls({(0, 0): 1}, trunc)

    @classmethod
    def constant(cls, c, trunc=None):
        return cls({(0, 0): c}, trunc)

    @classmethod
    def monomial(cls, i, j=0, c=1, trunc=None):
        return cls({(i, j): c}, trunc)

    @classmethod
    def geometric(cls, i, j, trunc):
        """1 / (1 - q^i t^j) expanded up to ``trunc``."""
        if i == 0 and j == 0:
            raise ZeroDivisionError("1/(1-1)")
        if trunc is None:
            raise NotPolynomial("a geometric series needs a truncation order")
        out = {}
        k = 0
        while k * i <= trunc and k * j <= trunc:
            out[(k * i, k * j)] = Fraction(1)
            k += 1
        return cls._raw(out, trunc)

    @classmethod
    def from_q_list(cls, coeffs: Iterable[Number], trunc=None):
        return cls({(i, 0): c for i, c in enumerate(coeffs)}, trunc)

    # -- basic protocol -------------------------------------------------------
    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def coefficient(self, i, j=0) -> Fraction:
        return self._c.get((i, j), Fraction(0))

    def __getitem__(self, key):
        if isinstance(key, int):
            return self.coefficient(key, 0)
        return self.coefficient(*key)

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def is_zero(self):
        return not self._c

    def truncate(self, n):
        if n is None:
            return self
        if self.trunc is not None and n > self.trunc:
            raise ValueError(f"cannot raise truncation from {self.trunc} to {n}")
        return QTSeries._raw({k: v for k, v in self._c.items() if k[0] <= n and k[1] <= n}, n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QTSeries.constant(other)
        if not isinstance(other, QTSeries):
            return NotImplemented
        n = _min_trunc(self.trunc, other.trunc)
        return self.truncate(n)._c == other.truncate(n)._c

    def __hash__(self):
        return hash((frozenset(self._c.items()), self.trunc))

    # -- arithmetic ------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QTSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return QTSeries.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = _min_trunc(self.trunc, other.trunc)
        out = dict(self.truncate(n)._c) if n != self.trunc else dict(self._c)
        for k, v in other._c.items():
            if n is not None and (k[0] > n or k[1] > n):
                continue
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return QTSeries._raw(out, n)

    __radd__ = __add__

    def __neg__(self):
        return QTSeries._raw({k: -v for k, v in self._c.items()}, self.trunc)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "QTSeries":
        c = _to_fraction(c)
        if not c:
            return QTSeries.zero(self.trunc)
        return QTSeries._raw({k: v * c for k, v in self._c.items()}, self.trunc)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QTSeries):
            return NotImplemented
        return _multiply(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / _to_fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = QTSeries.one(self.trunc)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- transformations -----------------------------------------------------
    def scale_exponents(self, k: int) -> "QTSeries":
        """Substitute q -> q^k, t -> t^k (the power-sum plethysm on a monomial alphabet)."""
        n = self.trunc
        return QTSeries._raw(
            {(k * i, k * j): v for (i, j), v in self._c.items() if n is None or (k * i <= n and k * j <= n)},
            n,
        )

    def swap(self) -> "QTSeries":
        return QTSeries._raw({(j, i): v for (i, j), v in self._c.items()}, self.trunc)

    def at_t0(self) -> "QTSeries":
        return QTSeries._raw({k: v for k, v in self._c.items() if k[1] == 0}, self.trunc)

    def reverse_q(self, degree: int) -> "QTSeries":
        """q^degree * p(1/q); requires a polynomial of q-degree at most ``degree``."""
        if self.trunc is not None:
            raise NotPolynomial("reverse_q needs an exact polynomial")
        if self._c and self.degree_q() > degree:
            raise ValueError(f"q-degree {self.degree_q()} exceeds {degree}")
        return QTSeries._raw({(degree - i, j): v for (i, j), v in self._c.items()}, None)

    def degree_q(self) -> int:
        return max((i for i, _ in self._c), default=-1)

    def degree_t(self) -> int:
        return max((j for _, j in self._c), default=-1)

    def evaluate(self, q, t=1):
        if self.trunc is not None:
            raise NotPolynomial("evaluate needs an exact polynomial; certify it first")
        q = _to_fraction(q)
        t = _to_fraction(t)
        return sum((v * q ** i * t ** j for (i, j), v in self._c.items()), Fraction(0))

    def certify_polynomial(self, bound_q: int, bound_t: int | None = None) -> "QTSeries":
        """Return the exact polynomial after checking that nothing lives above the bounds.

        The check is meaningful only when ``trunc`` exceeds the bounds, which is
        why the default truncation order leaves headroom above n^2.
        """
        if bound_t is None:
            bound_t = bound_q
        for (i, j), v in self._c.items():
            if i > bound_q or j > bound_t:
                raise NotPolynomial(f"nonzero coefficient {v} at q^{i} t^{j} beyond ({bound_q},{bound_t})")
        return QTSeries._raw(dict(self._c), None)

    def is_nonneg_integral(self) -> bool:
        return all(v.denominator == 1 and v >= 0 for v in self._c.values())

    def require_nonneg_integral(self):
        for k, v in sorted(self._c.items()):
            if v.denominator != 1 or v < 0:
                raise NegativeCoefficient(f"coefficient {v} at q^{k[0]} t^{k[1]}")
        return self

    def exact_divide(self, divisor: "QTSeries") -> "QTSeries":
        """Polynomial division that must leave no remainder."""
        if self.trunc is not None or divisor.trunc is not None:
            raise NotPolynomial("exact_divide works on polynomials")
        if not divisor._c:
            raise ZeroDivisionError("division by zero polynomial")
        lead = max(divisor._c)
        lc = divisor._c[lead]
        rem = dict(self._c)
        quot = {}
        while rem:
            top = max(rem)
            di, dj = top[0] - lead[0], top[1] - lead[1]
            if di < 0 or dj < 0:
                raise DivisionInexact(f"leading term q^{top[0]} t^{top[1]} not divisible")
            c = rem[top] / lc
            quot[(di, dj)] = c
            for (i, j), v in divisor._c.items():
                k = (i + di, j + dj)
                s = rem.get(k, 0) - c * v
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return QTSeries._raw(quot, None)

    def first_discrepancy(self, other: "QTSeries"):
        """Smallest (q, t) exponent where the two series differ, or None."""
        n = _min_trunc(self.trunc, other.trunc)
        a, b = self.truncate(n)._c, other.truncate(n)._c
        for k in sorted(set(a) | set(b)):
            if a.get(k, 0) != b.get(k, 0):
                return {"q_exp": k[0], "t_exp": k[1], "lhs": str(a.get(k, 0)), "rhs": str(b.get(k, 0))}
        return None

    # -- I/O --------------------------------------------------------------------
    def to_json(self) -> list:
        return [[i, j, v.numerator, v.denominator] for (i, j), v in self.items()]

    @classmethod
    def from_json(cls, data, trunc=None):
        return cls({(i, j): Fraction(num, den) for i, j, num, den in data}, trunc)

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for (i, j), v in sorted(self._c.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("q" if i == 1 else f"q^{i}"),
                    "" if j == 0 else ("t" if j == 1 else f"t^{j}"),
                ) if s
            )
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{v}*{mono}")
        text = " + ".join(parts).replace("+ -", "- ")
        if self.trunc is not None:
            text += f" + O({self.trunc + 1})"
        return text

    def __repr__(self):
        return f"QTSeries({self})"


# -- multiplication kernels ---------------------------------------------------

def _common_denominator(c: dict) -> int:
    d = 1
    for v in c.values():
        d = math.lcm(d, v.denominator)
    return d


def _multiply(a: QTSeries, b: QTSeries) -> QTSeries:
    n = _min_trunc(a.trunc, b.trunc)
    if not a._c or not b._c:
        return QTSeries._raw({}, n)
    da, db = _common_denominator(a._c), _common_denominator(b._c)
    ia = {k: int(v * da) for k, v in a._c.items()}
    ib = {k: int(v * db) for k, v in b._c.items()}
    if len(ia) * len(ib) < _KRONECKER_THRESHOLD:
        prod = _schoolbook(ia, ib, n)
    else:
        prod = _kronecker(ia, ib, n)
    den = da * db
    return QTSeries._raw({k: Fraction(v, den) for k, v in prod.items() if v}, n)


def _schoolbook(ia: dict, ib: dict, n) -> dict:
    if len(ia) > len(ib):
        ia, ib = ib, ia
    rows: dict[int, list] = {}
    for (i, j), v in ib.items():
        rows.setdefault(i, []).append((j, v))
    out: dict = {}
    for (i1, j1), v1 in ia.items():
        for i2, row in rows.items():
            i = i1 + i2
            if n is not None and i > n:
                continue
            for j2, v2 in row:
                j = j1 + j2
                if n is not None and j > n:
                    continue
                k = (i, j)
                out[k] = out.get(k, 0) + v1 * v2
    return out


def _kronecker(ia: dict, ib: dict, n) -> dict:
    """Multiply integer bivariate polynomials by packing them into big integers."""
    maxj = max(max(j for _, j in ia), max(j for _, j in ib))
    width = 2 * maxj + 1
    bound = max(abs(v) for v in ia.values()) * max(abs(v) for v in ib.values()) * min(len(ia), len(ib))
    nbytes = (bound.bit_length() + 8) // 8 + 1

    def split(d):
        pos = {k: v for k, v in d.items() if v > 0}
        neg = {k: -v for k, v in d.items() if v < 0}
        return pos, neg

    def pack(d):
        if not d:
            return 0
        top = max(i * width + j for i, j in d)
        buf = bytearray((top + 1) * nbytes)
        for (i, j), v in d.items():
            e = (i * width + j) * nbytes
            buf[e:e + nbytes] = v.to_bytes(nbytes, "little")
        return int.from_bytes(buf, "little")

    def unpack(x, sign, out):
        if not x:
            return
        raw = x.to_bytes((x.bit_length() + 7) // 8, "little")
        for slot in range(0, (len(raw) + nbytes - 1) // nbytes):
            chunk = raw[slot * nbytes:(slot + 1) * nbytes]
            v = int.from_bytes(chunk, "little")
            if v:
                i, j = divmod(slot, width)
                if n is not None and (i > n or j > n):
                    continue
                out[(i, j)] = out.get((i, j), 0) + sign * v

    ap, an = split(ia)
    bp, bn = split(ib)
    Pa, Na, Pb, Nb = pack(ap), pack(an), pack(bp), pack(bn)
    out: dict = {}
    unpack(Pa * Pb, 1, out)
    unpack(Na * Nb, 1, out)
    unpack(Pa * Nb, -1, out)
    unpack(Na * Pb, -1, out)
    return out


def q_binomial(n: int, k: int, step: int = 1, variable: str = "q") -> QTSeries:
    """Gaussian binomial [n choose k] in the variable ``variable``^step, as an exact polynomial."""
    if k < 0 or k > n:
        return QTSeries.zero()

    def qint_factorial(m):
        out = QTSeries.one()
        for i in range(1, m + 1):
            out = out * QTSeries({(step * r, 0): 1 for r in range(i)})
        return out

    res = qint_factorial(n).exact_divide(qint_factorial(k) * qint_factorial(n - k))
    return res.swap() if variable == "t" else res


def product_one_minus(n: int, step: int = 2, variable: str = "q") -> QTSeries:
    """prod_{i=1}^n (1 - v^{step*i}) as an exact polynomial."""
    out = QTSeries.one()
    for i in range(1, n + 1):
        out = out * QTSeries({(0, 0): 1, (step * i, 0): -1})
    return out.swap() if variable == "t" else out
