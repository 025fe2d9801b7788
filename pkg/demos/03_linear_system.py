"""
The integer system M_n v = -e
=============================

Requiring the nested polynomial to collapse to beta_0 x^n is a unimodular
upper-triangular integer system.  Its inverse has a closed binomial form.
"""

from gateforge.linear_system import build_Mn, inverse_formula, matmul, identity, solve_system

m = build_Mn(10)
print(m.to_csv())
inv = inverse_formula(10)
print("inverse rows 4 and 6:", inv.rows()[3], inv.rows()[5])
print("M_10 * inverse == I :", matmul(m, inv) == identity(10))
print("v =", solve_system(10))

# the matrices nest
print("leading 4x4 of M_10 is M_4:", m.leading_block(4) == build_Mn(4))
