"""Signed permutations and the flag-major index.

Walks through the group B_n, its statistics, and the fact that fmaj is
equidistributed with the degree in the coinvariant space.
"""

from hyperdiag import signed
from hyperdiag.frobenius import fmaj_product, fmaj_sum

# Windows are written with minus signs for bars.
beta = signed.parse("-2 -1 -5 4 3")
print("beta          =", beta)
print("beta^-1       =", signed.inverse(beta))
print("beta o beta^-1 =", signed.compose(beta, signed.inverse(beta)))

# Order on letters: -1 < -2 < ... < -n < 1 < 2 < ... < n
st = signed.stats(beta)
print(f"Des={sorted(st.des)} maj={st.maj} neg={st.neg} fmaj={st.fmaj}")

lv = signed.local_vectors(beta)
print("f =", lv.f, " sum =", sum(lv.f))
print("g =", signed.g_vector(beta))

# fmaj over B_n is prod_j [2j]_q
for n in range(1, 5):
    s = fmaj_sum(n)
    print(f"n={n}: sum q^fmaj = {s}")
    assert s == fmaj_product(n)

# The involution beta -> -w0 beta w0 reverses the local statistics.
print("circ(beta) =", signed.circ_involution(beta))
