"""Graded and bigraded multiplicities of B_n irreducibles.

Irreducibles are indexed by pairs (lam, rho).  The graded multiplicity in the
coinvariant space comes from a plethystic formula; the bigraded version uses
the diagonal alphabets.
"""

from hyperdiag import frobenius as fr

print("n = 3 graded multiplicities")
for lab in fr.irr_labels(3):
    print(f"  {str(lab):10s} {fr.mult_graded(lab)}")

print("\nflip symmetry, n = 4:", all(r.ok for r in fr.verify_flip_symmetry(4)))

print("\nbigraded trivial multiplicity, n = 2:")
print(" ", fr.trivial_hilbert(2))
print("alternating:")
print(" ", fr.alt_hilbert(2))

for n in (2, 3):
    print(f"\nn={n} identity checks")
    for rep in (fr.verify_genfunction(n), fr.verify_ogenfunction(n), fr.verify_corollary(n)):
        print(f"  {rep.identity:14s} {rep.status}")

# Psi: bigraded multiplicity divided by two Gaussian binomials
print("\nPsi_{(1),(1)}(q,t) =", fr.psi_polynomial((1,), (1,), 2))
