"""Diagonal coinvariants of the hyperoctahedral group B_n, computed exactly.

Submodules:

* ``signed``     signed permutations and their statistics
* ``series``     truncated q,t power series with rational coefficients
* ``symfunc``    partitions, S_n characters, plethysm at q,t-alphabets
* ``frobenius``  type-B characteristics, multiplicities, identity checks
* ``ediagrams``  e-diagrams, compacting moves, the bijection phi
* ``odiagrams``  o-diagrams, the map psi, phi_o
* ``polyring``   polynomials in x, y, monomial invariants, straightening
* ``cli``        the ``hyperdiag`` command
"""

from .signed import SignedPermutation, compose, fmaj, inverse, local_vectors, parse, stats
from .series import QTSeries
from .symfunc import Alphabet, SymExpansion, internal_product, mn_character, schur_of_alphabet
from .frobenius import IrrLabel, alt_hilbert, mult_bigraded, mult_graded, trivial_hilbert
from .ediagrams import EDiagram, classifying_perm, compact_of_perm, compactify, phi, phi_inverse
from .odiagrams import ODiagram, colabel_classifying_perm, compact_o_of_perm, psi
from .polyring import DiagPoly, expand_straightened, monomial_invariant, straighten

__version__ = "0.1.0"
