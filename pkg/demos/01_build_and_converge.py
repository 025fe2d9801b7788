"""
Building a sequence and watching it converge
============================================

For p = 2n + 1 the word A_p(U) is made of 2n + 1 copies of U or U^-1 with a
diagonal gate between each pair.  Feeding the output back in drives the
off-diagonal entry b to zero, with |b_{k+1}| = |b_k|^p.
"""

import numpy as np

from gateforge import build_word, convergence_report, normalize_word
from gateforge.unitary import su2_with_offdiag

# the raw word uses the D_j gates
w = build_word(3)
print("D_j form     :", w)

# each D_j is a scalar times a power of D(theta) = diag(1, e^{i theta})
nw = normalize_word(w)
print("D^m form     :", nw)
print("pulled phase :", nw.global_phase)

# start from a gate with |b| = 0.8 and iterate
u0 = su2_with_offdiag(np.random.default_rng(0), 0.8)
print("\n k   |b_k|          | |b_k+1| - |b_k|^7 |")
for row in convergence_report(u0, 3, 3):
    print(f"{row.k:2d}   {row.b_abs:.6e}   {row.residual:.1e}")
