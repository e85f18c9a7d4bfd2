"""Monomial diagonal invariants and straightening.

Any M(D) is a combination of the compact basis M_beta with coefficients in
m_lam(x^2) m_mu(y^2).  The expansion is checked by multiplying it back out.
"""

import random

from hyperdiag import ediagrams as ed
from hyperdiag import polyring as pr
from hyperdiag import signed

print("compact basis for n = 2")
for beta, M in pr.compact_basis(2).items():
    print(f"  M[{beta}] = {M}")

form = pr.straighten([1, 4], [3, 4])
print("\nM(1 4 / 3 4) =", form)
assert pr.expand_straightened(form) == pr.monomial_invariant([1, 4], [3, 4])
print("certificate: expansion matches")

# Processing order does not matter.
D = ed.from_rows([1, 3, 5], [5, 3, 1])
a = pr.straighten(D)
b = pr.straighten(D, order="random", rng=random.Random(3))
print(f"\n{len(a.terms)} terms for {D.cells}; random order agrees: {a == b}")

# Leading monomials of the basis are pairwise distinct.
for n in range(1, 4):
    leads = {M.leading_monomial() for M in pr.compact_basis(n).values()}
    print(f"n={n}: {len(leads)} distinct leading monomials out of {signed.order(n)}")
