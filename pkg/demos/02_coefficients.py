"""
Coefficients of the nested polynomial
=====================================

b_{k+1}/b_k is a nested polynomial in |a_k|^2 and |b_k|^2 with coefficients
beta_j.  The law |b_{k+1}| = |b_k|^p holds exactly when beta_j / beta_0 are
the signed binomials returned by ``conjectured_v``.  Here they are computed
from the shift recursion and compared, then certified exactly in Z[omega].
"""

import numpy as np

from gateforge import coefficients as co

for n in range(1, 7):
    t = co.recurse_coeffs(n)
    v = np.round(np.array(t.v[1:]), 12)
    print(f"n={n}  beta_0={t.beta[0].real:+.0f}  v={v.tolist()}  binomials={co.conjectured_v(n)}")

# the same values by the general nested-sum formula
a, b = co.general_nested(5, 3)
print("\nnested sum, n=5 j=3:", np.round(b, 12), " recursion:", np.round(co.recurse_coeffs(5).beta[3], 12))

# exact certificate: beta_j - beta_0 v_j reduces to zero modulo Phi_{4p}
cert = co.exact_verify(4, 2)
print("exact n=4 j=2:", cert.passed, cert.residual)

# with the right values the polynomial collapses to beta_0 x^n
t = co.recurse_coeffs(3)
for x in (0.1, 0.25, 0.5):
    print(f"eval_B(x={x}) = {co.eval_B(t, x):+.6f}   beta_0 x^3 = {-x ** 3:+.6f}")
