"""o-diagrams: n-element sets of odd cells (a + b odd), classified through the
colabelling order (b, -a), together with their compact representatives and
the map psi from compact e-diagrams."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import signed
from .ediagrams import (
    ENUMERATION_CAP,
    EDiagram,
    _check_cells,
    classifying_perm,
    compact_of_perm,
    format_two_line,
    marginal_partition,
    parse_cells,
)
from .errors import (
    CapExceeded,
    DiagramError,
    EvenParityCell,
    NegativeEntry,
    NotCompact,
    PartTooLarge,
    RepeatedCell,
)
from .signed import SignedPermutation


def col_key(c):
    return (c[1], -c[0])


@dataclass(frozen=True)
class ODiagram:
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

    def weight(self):
        return (sum(self.a), sum(self.b))

    def __str__(self):
        return format_two_line(self.cells)

    def to_json(self):
        return {"kind": "o", "cells": [list(c) for c in self.cells]}

    def entrywise_leq(self, other: "ODiagram") -> bool:
        return all(x[0] <= y[0] and x[1] <= y[1] for x, y in zip(self.cells, other.cells))


def normalize_o(cells: Sequence, n: int | None = None) -> ODiagram:
    cells = _check_cells(cells, n)
    seen = set()
    for idx, (a, b) in enumerate(cells):
        if (a + b) % 2 == 0:
            raise EvenParityCell(f"cell {idx} = ({a},{b}) has even parity")
        if (a, b) in seen:
            raise RepeatedCell(f"cell ({a},{b}) occurs twice")
        seen.add((a, b))
    return ODiagram(tuple(sorted(cells)))


def parse_odiagram(text: str) -> ODiagram:
    cells, _ = parse_cells(text)
    return normalize_o(cells)


def colabels(cells: Sequence) -> list[int]:
    order = sorted(range(len(cells)), key=lambda i: col_key(cells[i]))
    lab = [0] * len(cells)
    for pos, i in enumerate(order, start=1):
        lab[i] = pos
    return lab


def colabel_classifying_perm(D: ODiagram) -> SignedPermutation:
    lab = colabels(D.cells)
    return SignedPermutation(tuple(l if a % 2 else -l for (a, _), l in zip(D.cells, lab)))


def compact_o_of_perm(beta: SignedPermutation) -> ODiagram:
    """D^s_beta = (g(beta), ghat(beta))."""
    return ODiagram(tuple(sorted(zip(signed.g_vector(beta), signed.g_hat(beta)))))


def psi(D: EDiagram, must_be_compact: bool = True) -> ODiagram:
    """(g, g~) -> (g, c - g~) with c_i = 2 sigma(i) - 1.

    A non-compact input raises NotCompact, or is compactified first when
    ``must_be_compact`` is False.
    """
    beta = classifying_perm(D)
    C = compact_of_perm(beta)
    if C != D:
        if must_be_compact:
            raise NotCompact(f"{D.cells} is not compact")
        D = C
    cells = []
    for (g, gt), s in zip(D.cells, beta.sigma):
        b = 2 * s - 1 - gt
        if b < 0:
            raise NegativeEntry(f"c - g~ is negative at ({g},{gt})")
        cells.append((g, b))
    return normalize_o(cells)


def compactify_o(D: ODiagram) -> ODiagram:
    return compact_o_of_perm(colabel_classifying_perm(D))


def is_compact_o(D: ODiagram) -> bool:
    return compactify_o(D) == D


def phi_o(D: ODiagram) -> tuple[ODiagram, tuple, tuple]:
    C = compactify_o(D)
    return C, marginal_partition(D.a, C.a), marginal_partition(D.b, C.b)


def phi_o_inverse(compact: ODiagram, lam: Sequence[int], mu: Sequence[int]) -> ODiagram:
    """Undo phi_o: each part k of lam pushes the last k cells in reading order
    right by 2, each part k of mu pushes the last k cells in colabelling order
    up by 2."""
    n = compact.n
    if not is_compact_o(compact):
        raise NotCompact(f"{compact.cells} is not a compact o-diagram")
    for part in tuple(lam) + tuple(mu):
        if part > n:
            raise PartTooLarge(f"part {part} exceeds n={n}")
        if part < 1:
            raise DiagramError(f"bad part {part}")
    cells = list(compact.cells)
    for k in sorted(lam, reverse=True):
        for i in range(n - k, n):
            cells[i] = (cells[i][0] + 2, cells[i][1])
        cells.sort()
    for k in sorted(mu, reverse=True):
        order = sorted(range(n), key=lambda i: col_key(cells[i]))
        for i in order[n - k:]:
            cells[i] = (cells[i][0], cells[i][1] + 2)
        cells.sort()
    return normalize_o(cells)


# -- enumeration -------------------------------------------------------------------

def odd_cells(max_entry: int) -> list:
    return [(a, b) for a in range(max_entry + 1) for b in range(max_entry + 1) if (a + b) % 2 == 1]


def count_odiagrams(n: int, max_entry: int) -> int:
    return math.comb(len(odd_cells(max_entry)), n)


def enumerate_odiagrams(n: int, max_entry: int, cap: int = ENUMERATION_CAP) -> Iterator[ODiagram]:
    if count_odiagrams(n, max_entry) > cap:
        raise CapExceeded(f"{count_odiagrams(n, max_entry)} diagrams exceed cap {cap}")
    for combo in itertools.combinations(odd_cells(max_entry), n):
        yield ODiagram(combo)


def random_odiagram(n: int, max_entry: int, rng: random.Random) -> ODiagram:
    return ODiagram(tuple(sorted(rng.sample(odd_cells(max_entry), n))))
