"""
Supporting identities
=====================

Three trigonometric facts at theta = pi/(2n+1) and the alternating binomial
sum that kills every polynomial of degree below d.
"""

from gateforge.identities import lemma_a1, lemma_a2, lemma_a3, ruiz_identity, inverse_proof_poly

for n in (1, 10, 1000):
    print(f"n={n:5d}  A1 err {lemma_a1(n).abs_error:.1e}  A2 err {lemma_a2(min(n, 500)).abs_error:.1e}"
          f"  A3 err {lemma_a3(n).abs_error:.1e}")

print("sum (-1)^j C(3,j) j^2:", ruiz_identity([0, 0, 1], 3).lhs)
print("polynomial from the inverse proof, m=3 i=2 R=1:", inverse_proof_poly(3, 2, 1))
try:
    ruiz_identity([0, 0, 1], 2)
except ValueError as e:
    print("degree equal to d:", e)
