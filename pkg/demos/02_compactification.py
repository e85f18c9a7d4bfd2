"""e-diagrams, their classifying signed permutation, and compactification.

Starts from a nine-cell diagram, compacts it by random left/down moves,
checks the answer against the closed formula, and peels off the two
partitions recorded by phi.  Ends with psi, which sends the compact
e-diagram to a compact o-diagram of the same class.
"""

import random

from hyperdiag import ediagrams as ed
from hyperdiag import odiagrams as od

D = ed.from_rows([0, 0, 1, 2, 2, 6, 8, 9, 9], [0, 0, 5, 6, 6, 4, 0, 5, 9])
print(D, "\n")
beta = ed.classifying_perm(D)
print("classifying permutation:", beta)

C = ed.compactify(D)
print("compact form (formula):\n" + str(C))

rng = random.Random(7)
for _ in range(3):
    assert ed.compactify_by_moves(D, rng) == C
print("three random move orders agree\n")

# A move is blocked when a cell sits strictly between the start and end.
E = ed.from_rows([1, 2, 3], [1, 0, 1])
print("moves available in", E.cells, "->", ed.allowed_moves(E))

r = ed.phi(D)
print(f"phi: lam={r.lam} mu={r.mu}")
assert ed.phi_inverse(r) == D

O = od.psi(C)
print("psi(compact):\n" + str(O))
print("colabelling permutation:", od.colabel_classifying_perm(O))
