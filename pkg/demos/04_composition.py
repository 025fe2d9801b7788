"""
Composite lengths
=================

A word for p1 * p2 is obtained by substituting the p1 word (angles rescaled)
for every U in the p2 word.  The exponent of the law multiplies.
"""

import math

import numpy as np

from gateforge import apply, word_for_factors
from gateforge.sequences import OMEGA
from gateforge.unitary import random_su2

w = word_for_factors([3, 5], OMEGA)
print("N =", w.N)
print("powers of D:", w.diagonal_indices())

rng = np.random.default_rng(1)
for _ in range(3):
    u = random_su2(rng)
    print(f"|b0| = {abs(u.b):.4f}   |b1| = {abs(apply(w, u).b):.3e}   |b0|^15 = {abs(u.b) ** 15:.3e}")

# larger factorizations work the same way
for f in ([3, 3], [5, 5], [3, 3, 3]):
    w = word_for_factors(f)
    u = random_su2(rng)
    print(f, "N =", math.prod(f), " residual:", abs(abs(apply(w, u).b) - abs(u.b) ** math.prod(f)))
