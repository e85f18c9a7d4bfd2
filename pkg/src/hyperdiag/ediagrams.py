"""e-diagrams: n-cell multisets of even cells (a, b), a + b even.

Three orders on cells drive everything here:

* reading order: lexicographic on (a, b);
* labelling order: lexicographic on (b, a), ties broken by reading position;
* colabelling order (o-diagrams only): on (b, -a).

A diagram is stored as its lex-sorted tuple of cells.  Column i of the
two-line notation is ``cells[i]``.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import signed
from .errors import (
    Blocked,
    CapExceeded,
    DiagramError,
    ExponentTooSmall,
    NonTermination,
    NotCompact,
    OddParityCell,
    PairingViolation,
    PartTooLarge,
    WrongCount,
)
from .signed import SignedPermutation

Cell = tuple  # (a, b)

ENUMERATION_CAP = 2_000_000


def lex_key(c: Cell):
    return (c[0], c[1])


def op_key(c: Cell):
    return (c[1], c[0])


def transpose_cells(cells: Sequence[Cell]) -> tuple:
    return tuple(sorted((b, a) for a, b in cells))


@dataclass(frozen=True)
class EDiagram:
    cells: tuple

    @property
    def n(self):
        return len(self.cells)

    @property
    def a(self):
        return tuple(c[0] for c in self.cells)

    @property
    def b(self):
        return tuple(c[1] for c in self.cells)

    def weight(self) -> tuple[int, int]:
        return (sum(self.a), sum(self.b))

    def transpose(self) -> "EDiagram":
        return EDiagram(transpose_cells(self.cells))

    def __str__(self):
        return format_two_line(self.cells)

    def to_json(self) -> dict:
        return {"cells": [list(c) for c in self.cells]}

    def entrywise_leq(self, other: "EDiagram") -> bool:
        return all(x[0] <= y[0] and x[1] <= y[1] for x, y in zip(self.cells, other.cells))


def _check_cells(cells, n):
    out = []
    for idx, c in enumerate(cells):
        if len(c) != 2:
            raise DiagramError(f"cell {idx} is not a pair: {c!r}")
        a, b = int(c[0]), int(c[1])
        if a < 0 or b < 0:
            raise DiagramError(f"cell {idx} has a negative coordinate: ({a},{b})")
        out.append((a, b))
    if n is not None and len(out) != n:
        raise WrongCount(f"expected {n} cells, got {len(out)}")
    return out


def normalize(cells: Sequence[Cell], n: int | None = None) -> EDiagram:
    cells = _check_cells(cells, n)
    for idx, (a, b) in enumerate(cells):
        if (a + b) % 2:
            raise OddParityCell(f"cell {idx} = ({a},{b}) has odd parity")
    return EDiagram(tuple(sorted(cells)))


def from_rows(a: Sequence[int], b: Sequence[int]) -> EDiagram:
    if len(a) != len(b):
        raise WrongCount("rows have different lengths")
    return normalize(list(zip(a, b)))


# -- text / JSON ------------------------------------------------------------------

def format_two_line(cells) -> str:
    top = [str(c[0]) for c in cells]
    bot = [str(c[1]) for c in cells]
    w = max([len(s) for s in top + bot] or [1])
    return " ".join(s.rjust(w) for s in top) + "\n" + " ".join(s.rjust(w) for s in bot)


def parse_cells(text: str) -> tuple[list[Cell], str | None]:
    """Read cells from the two-line format or from JSON.

    Two-line input is either two lines of integers or one line with the rows
    separated by '/'.  Returns (cells, kind) where kind is 'e', 'o' or None.
    """
    s = text.strip()
    if s.startswith("{"):
        data = json.loads(s)
        return [tuple(c) for c in data["cells"]], data.get("kind")
    if "/" in s:
        rows = s.split("/")
    else:
        rows = [ln for ln in s.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(rows) != 2:
        raise DiagramError(f"expected two rows, got {len(rows)}")
    try:
        top = [int(x) for x in rows[0].replace(",", " ").split()]
        bot = [int(x) for x in rows[1].replace(",", " ").split()]
    except ValueError as exc:
        raise DiagramError(f"non-integer entry: {exc}") from exc
    if len(top) != len(bot):
        raise WrongCount(f"rows have lengths {len(top)} and {len(bot)}")
    return list(zip(top, bot)), None


def parse_ediagram(text: str) -> EDiagram:
    cells, _ = parse_cells(text)
    return normalize(cells)


# -- descents, changes of parity, classification -------------------------------------

def des_sch(D: EDiagram) -> tuple[frozenset, frozenset]:
    """Des(D) = {k : b_k > b_{k+1}, a_k = a_{k+1} mod 2}; Sch(D) = {k : a_k != a_{k+1} mod 2}.

    Position 0 belongs to Sch exactly when a_1 is odd.
    """
    a, b = D.a, D.b
    n = D.n
    des = frozenset(k for k in range(1, n) if b[k - 1] > b[k] and a[k - 1] % 2 == a[k] % 2)
    sch = set(k for k in range(1, n) if a[k - 1] % 2 != a[k] % 2)
    if n and a[0] % 2 == 1:
        sch.add(0)
    return des, frozenset(sch)


def g_of_diagram(D: EDiagram) -> tuple[int, ...]:
    """g_i(D) = 2 delta_i(D) + s_i(D), counting Des below i and Sch below i."""
    des, sch = des_sch(D)
    return tuple(
        2 * sum(1 for k in des if k < i) + sum(1 for k in sch if k < i) for i in range(1, D.n + 1)
    )


def labels(cells: Sequence[Cell]) -> list[int]:
    """Label (1-based position in labelling order) of each cell in reading order."""
    order = sorted(range(len(cells)), key=lambda i: (cells[i][1], cells[i][0], i))
    lab = [0] * len(cells)
    for pos, i in enumerate(order, start=1):
        lab[i] = pos
    return lab


def classifying_perm(D: EDiagram) -> SignedPermutation:
    lab = labels(D.cells)
    return SignedPermutation(tuple(l if a % 2 else -l for (a, _), l in zip(D.cells, lab)))


def compact_of_perm(beta: SignedPermutation) -> EDiagram:
    """D_beta = (g(beta), g~(beta)); columns come out already in reading order."""
    g = signed.g_vector(beta)
    gt = signed.g_tilde(beta)
    return EDiagram(tuple(zip(g, gt)))


def compactify(D: EDiagram) -> EDiagram:
    """Closed formula (g(D), g~(D)) with g~_i(D) = g_{sigma(i)}(D*)."""
    g = g_of_diagram(D)
    gstar = g_of_diagram(D.transpose())
    sigma = classifying_perm(D).sigma
    return EDiagram(tuple(sorted(zip(g, (gstar[s - 1] for s in sigma)))))


def is_compact(D: EDiagram) -> bool:
    return compact_of_perm(classifying_perm(D)) == D


# -- compacting moves ----------------------------------------------------------------

def vert(D: EDiagram, index: int) -> list[int]:
    """Indices of cells strictly between (a-2, b) and (a, b) in reading order."""
    a, b = D.cells[index]
    lo, hi = (a - 2, b), (a, b)
    return [i for i, c in enumerate(D.cells) if lo < c < hi]


def horiz(D: EDiagram, index: int) -> list[tuple[int, int]]:
    """Cells blocking a down move: Vert computed on the transposed diagram, transposed back."""
    a, b = D.cells[index]
    lo, hi = (b - 2, a), (b, a)
    return [(x, y) for (x, y) in D.cells if lo < (y, x) < hi]


def try_move(D: EDiagram, index: int, direction: str) -> EDiagram:
    if not 0 <= index < D.n:
        raise IndexError(f"cell index {index} out of range")
    a, b = D.cells[index]
    if direction == "left":
        if a < 2:
            raise ExponentTooSmall(f"cannot move ({a},{b}) left")
        blockers = [D.cells[i] for i in vert(D, index)]
        new = (a - 2, b)
    elif direction == "down":
        if b < 2:
            raise ExponentTooSmall(f"cannot move ({a},{b}) down")
        blockers = horiz(D, index)
        new = (a, b - 2)
    else:
        raise ValueError(f"unknown direction {direction!r}")
    if blockers:
        raise Blocked(f"{direction} move of ({a},{b}) blocked", blockers)
    cells = list(D.cells)
    cells.pop(cells.index((a, b)))
    cells.append(new)
    return EDiagram(tuple(sorted(cells)))


def allowed_moves(D: EDiagram) -> list[tuple[int, str]]:
    out = []
    seen = set()
    for i, c in enumerate(D.cells):
        if c in seen:
            continue
        seen.add(c)
        for direction in ("left", "down"):
            try:
                try_move(D, i, direction)
            except (Blocked, ExponentTooSmall):
                continue
            out.append((i, direction))
    return out


def compactify_by_moves(D: EDiagram, rng: random.Random | None = None, max_steps: int | None = None) -> EDiagram:
    """Apply allowed moves until none is left; random choices when ``rng`` is given."""
    steps = 0
    limit = max_steps if max_steps is not None else (sum(D.a) + sum(D.b)) // 2 + 1
    while True:
        moves = allowed_moves(D)
        if not moves:
            return D
        i, d = rng.choice(moves) if rng is not None else moves[0]
        D = try_move(D, i, d)
        steps += 1
        if steps > limit:
            raise NonTermination("compacting moves did not terminate")


def big_move(D: EDiagram, start_index: int, direction: str) -> EDiagram:
    """Shift a whole tail of cells by -2.

    For a left move the tail is cells[start_index:] in reading order; for a
    down move it is the tail of the labelling order starting at position
    ``start_index``.
    """
    cells = list(D.cells)
    if direction == "left":
        try_move(D, start_index, "left")
        for i in range(start_index, D.n):
            a, b = cells[i]
            cells[i] = (a - 2, b)
    elif direction == "down":
        order = sorted(range(D.n), key=lambda i: (cells[i][1], cells[i][0], i))
        try_move(D, order[start_index], "down")
        for i in order[start_index:]:
            a, b = cells[i]
            cells[i] = (a, b - 2)
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return EDiagram(tuple(sorted(cells)))


# -- the bijection D <-> (compact, lam, mu) ------------------------------------------

@dataclass(frozen=True)
class PhiResult:
    compact: EDiagram
    lam: tuple
    mu: tuple

    def to_json(self):
        return {"compact": self.compact.to_json(), "lam": list(self.lam), "mu": list(self.mu)}


def marginal(values: Sequence[int]) -> Counter:
    """Multiset of the nonzero h_i = #{v > i}, i >= 0."""
    top = max(values, default=0)
    return Counter(h for h in (sum(1 for v in values if v > i) for i in range(top)) if h)


def marginal_partition(big: Sequence[int], small: Sequence[int]) -> tuple:
    """eta of the difference of the two marginal multisets."""
    diff = marginal(big)
    diff.subtract(marginal(small))
    if any(v < 0 for v in diff.values()):
        raise PairingViolation(f"marginal of {tuple(small)} is not contained in that of {tuple(big)}")
    parts = sorted(diff.elements(), reverse=True)
    if any(parts[2 * i] != parts[2 * i + 1] for i in range(len(parts) // 2)) or len(parts) % 2:
        raise PairingViolation(f"difference multiset {parts} does not come in equal pairs")
    return tuple(parts[::2])


def phi(D: EDiagram) -> PhiResult:
    C = compactify(D)
    return PhiResult(C, marginal_partition(D.a, C.a), marginal_partition(D.b, C.b))


def _shift_tail(cells: list, order: list[int], k: int, coord: int) -> None:
    for i in order[len(order) - k:]:
        c = list(cells[i])
        c[coord] += 2
        cells[i] = tuple(c)


def phi_inverse(r: PhiResult) -> EDiagram:
    C = r.compact
    n = C.n
    if not is_compact(C):
        raise NotCompact(f"{C.cells} is not compact")
    for part in r.lam + r.mu:
        if part > n:
            raise PartTooLarge(f"part {part} exceeds n={n}")
        if part < 1:
            raise DiagramError(f"bad part {part}")
    cells = list(C.cells)
    for k in sorted(r.lam, reverse=True):
        _shift_tail(cells, list(range(n)), k, 0)
        cells.sort()
    for k in sorted(r.mu, reverse=True):
        order = sorted(range(n), key=lambda i: (cells[i][1], cells[i][0], i))
        _shift_tail(cells, order, k, 1)
        cells.sort()
    return EDiagram(tuple(cells))


# -- enumeration -------------------------------------------------------------------

def even_cells(max_entry: int) -> list[Cell]:
    return [(a, b) for a in range(max_entry + 1) for b in range(max_entry + 1) if (a + b) % 2 == 0]


def count_ediagrams(n: int, max_entry: int) -> int:
    k = len(even_cells(max_entry))
    return math.comb(k + n - 1, n)


def enumerate_ediagrams(n: int, max_entry: int, cap: int = ENUMERATION_CAP) -> Iterator[EDiagram]:
    if count_ediagrams(n, max_entry) > cap:
        raise CapExceeded(f"{count_ediagrams(n, max_entry)} diagrams exceed cap {cap}")
    for combo in itertools.combinations_with_replacement(even_cells(max_entry), n):
        yield EDiagram(combo)


def random_ediagram(n: int, max_entry: int, rng: random.Random) -> EDiagram:
    cells = rng.choices(even_cells(max_entry), k=n)
    return EDiagram(tuple(sorted(cells)))
