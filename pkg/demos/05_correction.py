"""
The F correction
================

Without correction the diagonal limit keeps rotating: a_{k+1}/a_k tends to
alpha_0.  Post-multiplying by F = diag(alpha_0^-1, alpha_0) stops the
rotation.  The limit is then a fixed diagonal gate, but not the identity
(its distance from I is of order |b_0|^2), so the iterates settle somewhere
other than I.
"""

import numpy as np

from gateforge import iterate
from gateforge.unitary import su2_with_offdiag

u0 = su2_with_offdiag(np.random.default_rng(3), 0.5)
plain = iterate(u0, 1, 5)
fixed = iterate(u0, 1, 5, correct=True)

print(" k   a_k (plain)              a_k (with F)            ||U_k - I||")
for k, (p, f) in enumerate(zip(plain, fixed), start=1):
    dist = np.max(np.abs(f.matrix() - np.eye(2)))
    print(f"{k:2d}   {p.a:.6f}   {f.a:.6f}   {dist:.3f}")
